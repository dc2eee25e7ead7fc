#include <doctest.h>

#include "crossint/exactmath.hpp"
#include "oracles.hpp"

using namespace crossint;

TEST_SUITE("exactmath") {

TEST_CASE("bignat arithmetic") {
  BigNat a = BigNat::from_string("123456789012345678901234567890");
  BigNat b(10);
  CHECK((a * b).str() == "1234567890123456789012345678900");
  CHECK((a * b).exact_div(b) == a);
  CHECK_THROWS_AS(BigNat(7).exact_div(2), std::domain_error);
  CHECK_THROWS_AS(BigNat(3) - BigNat(4), std::domain_error);
  CHECK(BigNat(2).pow(100).str() == "1267650600228229401496703205376");
  CHECK(BigNat(3) < BigNat(4));
  CHECK(BigNat::from_string("99999999999999999999") > BigNat(~std::uint64_t{0}));
  CHECK_THROWS(BigNat::from_string("12x"));
  CHECK_THROWS_AS(BigNat::from_string("99999999999999999999").to_u64(), std::overflow_error);
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == BigNat(10));
  CHECK(binomial(4, 5) == BigNat(0));
  CHECK(binomial(4, -1) == BigNat(0));
  CHECK(binomial(30, 15) == BigNat(oracle::pascal(30, 15)));
  for (int n = 0; n <= 40; ++n)
    for (int k = 0; k <= n; ++k) REQUIRE(binomial(n, k) == BigNat(oracle::pascal(n, k)));
}

TEST_CASE("gaussian binomial") {
  CHECK(gaussian_binomial(4, 2, 2) == BigNat(35));
  CHECK(gaussian_binomial(4, 2, 3) == BigNat(130));
  CHECK(gaussian_binomial(7, 0, 5) == BigNat(1));
  CHECK(gaussian_binomial(3, 4, 2) == BigNat(0));
  CHECK(gaussian_binomial(3, -1, 2) == BigNat(0));
  CHECK_THROWS_AS(gaussian_binomial(4, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(gaussian_binomial(4, 2, 0), std::invalid_argument);
  // independent count: distinct spans as point sets
  CHECK(gaussian_binomial(4, 2, 2) == BigNat(oracle::subspaces_by_span(4, 2, 2).size()));
  CHECK(gaussian_binomial(4, 2, 3) == BigNat(oracle::subspaces_by_span(4, 3, 2).size()));
  for (int q = 2; q <= 4; ++q)
    for (int n = 0; n <= 8; ++n)
      for (int k = 0; k <= n; ++k) REQUIRE(gaussian_binomial(n, k, q) == gaussian_binomial(n, n - k, q));
}

TEST_CASE("derangements") {
  CHECK(derangements(0) == BigNat(1));
  CHECK(derangements(1) == BigNat(0));
  for (int n = 2; n <= 8; ++n) {
    std::uint64_t count = 0;
    for (const auto& p : oracle::all_perms(n)) count += oracle::fixed_points(p) == 0;
    REQUIRE(derangements(n) == BigNat(count));
  }
  CHECK(derangements(4) == BigNat(9));
  CHECK(derangements(5) == BigNat(44));
  // D_n - n D_{n-1} = (-1)^n
  for (int n = 1; n <= 20; ++n) {
    const BigNat lhs = derangements(n), rhs = BigNat(static_cast<std::uint64_t>(n)) * derangements(n - 1);
    if (n % 2 == 0) REQUIRE(lhs == rhs + BigNat(1));
    else REQUIRE(lhs + BigNat(1) == rhs);
  }
}

TEST_CASE("degree formulas against direct counts") {
  auto set_count = [](int n, int a, int b, int t) {
    const std::uint64_t fixed = (std::uint64_t{1} << a) - 1;
    std::uint64_t c = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
      if (std::popcount(m) == b && std::popcount(m & fixed) < t) ++c;
    return c;
  };
  CHECK(set_degree(5, 2, 2, 1) == BigNat(3));
  CHECK(set_degree(6, 2, 3, 1) == BigNat(4));
  CHECK(set_degree(5, 3, 3, 2) == BigNat(3));
  for (int n = 1; n <= 9; ++n)
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int t = 1; t <= 4; ++t) REQUIRE(set_degree(n, a, b, t) == BigNat(set_count(n, a, b, t)));
  CHECK_THROWS(set_degree(5, 2, 2, 0));

  CHECK(subspace_degree(4, 2, 2, 2, 1) == BigNat(16));
  CHECK(subspace_degree(5, 2, 2, 2, 1) == BigNat(112));
  CHECK(subspace_degree(4, 2, 1, 1, 1) == BigNat(14));
  // t - 1 >= a: the sum stops at i = a and counts everything
  CHECK(subspace_degree(4, 2, 2, 2, 5) == gaussian_binomial(4, 2, 2));
  CHECK_THROWS(subspace_degree(4, 1, 2, 2, 1));

  CHECK(permutation_degree(4, 1) == BigNat(9));
  CHECK(permutation_degree(4, 2) == BigNat(17));
  CHECK(permutation_degree(5, 3) == BigNat(109));
  for (int n = 3; n <= 7; ++n)
    for (int t = 1; t <= n - 2; ++t) {
      std::uint64_t c = 0;
      for (const auto& p : oracle::all_perms(n)) c += oracle::fixed_points(p) < t;
      REQUIRE(permutation_degree(n, t) == BigNat(c));
    }
  CHECK_THROWS_AS(permutation_degree(4, 3), HypothesisError);
  CHECK_THROWS_AS(permutation_degree(4, 0), HypothesisError);
}

TEST_CASE("family bounds") {
  CHECK(cross_bound_sets(5, 2, 2, 1) == BigNat(8));
  CHECK(cross_bound_sets(6, 2, 3, 1) == BigNat(17));
  CHECK(cross_bound_sets(5, 3, 3, 2) == BigNat(8));
  CHECK(cross_bound_sets(7, 2, 3, 1) == BigNat(26));
  CHECK(cross_bound_subspaces(4, 2, 2, 2, 1) == BigNat(20));
  CHECK(cross_bound_subspaces(5, 2, 2, 2, 1) == BigNat(44));
  CHECK(cross_bound_permutations(4, 1) == BigNat(16));
  CHECK(cross_bound_permutations(4, 2) == BigNat(8));
  CHECK(cross_bound_permutations(5, 1) == BigNat(77));
  CHECK(cross_bound_permutations(5, 2) == BigNat(32));
  CHECK(cross_bound_permutations(5, 3) == BigNat(12));
}

TEST_CASE("named hypothesis errors") {
  auto message = [](auto&& f) -> std::string {
    try {
      f();
    } catch (const HypothesisError& e) {
      return e.what();
    }
    return "no error";
  };
  CHECK(message([] { cross_bound_sets(4, 2, 2, 1); }) == "(n,t)=(a+b,1) excluded");
  CHECK(message([] { cross_bound_subspaces(4, 2, 2, 2, 2); }) == "t < min(a,b) violated");
  CHECK(message([] { cross_bound_sets(3, 2, 2, 1); }) == "n >= 4 violated");
  CHECK(message([] { cross_bound_sets(6, 3, 2, 1); }) == "C(n,a) <= C(n,b) violated");
  CHECK(message([] { cross_bound_sets(5, 3, 3, 1); }) == "a+b < n+t violated");
  CHECK(message([] { cross_bound_permutations(4, 3); }) == "1 <= t <= n-2 violated");
  CHECK(message([] { cross_bound_permutations(3, 1); }) != "no error");
  CHECK(message([] { cross_bound_subspaces(4, 1, 2, 2, 1); }) == "q >= 2 violated");
  // unchecked forms still evaluate
  CHECK(cross_bound_sets_unchecked(4, 2, 2, 1) == BigNat(6));
}

TEST_CASE("closed forms equal part size minus degree plus one") {
  for (int n = 4; n <= 10; ++n)
    for (int a = 2; a <= n; ++a)
      for (int b = 2; b <= n; ++b)
        for (int t = 1; t < std::min(a, b); ++t) {
          BigNat v;
          try {
            v = cross_bound_sets(n, a, b, t);
          } catch (const HypothesisError&) {
            continue;
          }
          REQUIRE(v == binomial(n, b) + BigNat(1) - set_degree(n, a, b, t));
          if (t == 1 && n >= a + b && a <= b) REQUIRE(v == hm_ft_bound(n, a, b));
        }
  for (int n = 4; n <= 9; ++n)
    for (int t = 1; t <= n - 2; ++t)
      REQUIRE(cross_bound_permutations(n, t) == factorial(n) + BigNat(1) - permutation_degree(n, t));
  for (int q : {2, 3})
    for (int n = 4; n <= 7; ++n)
      for (int a = 2; a <= n; ++a)
        for (int b = a; b <= n; ++b)
          for (int t = 1; t < std::min(a, b); ++t) {
            BigNat v;
            try {
              v = cross_bound_subspaces(n, q, a, b, t);
            } catch (const HypothesisError&) {
              continue;
            }
            REQUIRE(v == gaussian_binomial(n, b, q) + BigNat(1) - subspace_degree(n, q, a, b, t));
          }
}

TEST_CASE("hilton and hm-ft") {
  CHECK(hilton_bound(4, 2, 2) == BigNat(6));
  CHECK(hilton_bound(4, 2, 3) == BigNat(9));
  CHECK(hilton_bound(6, 3, 2) == BigNat(20));
  CHECK_THROWS(hilton_bound(5, 3, 2));
  CHECK_THROWS(hilton_bound(6, 2, 0));
  CHECK(hm_ft_bound(5, 2, 2) == BigNat(8));
  CHECK(hm_ft_bound(6, 2, 3) == BigNat(17));
  // n - a < b would need n < a + b, which the precondition already rejects
  CHECK_THROWS_AS(hm_ft_bound(5, 2, 4), HypothesisError);
  CHECK(hm_ft_bound(7, 3, 4) == binomial(7, 4));  // C(n-a,b) = 1 at n = a+b
  CHECK_THROWS(hm_ft_bound(4, 2, 3));
  CHECK_THROWS(hm_ft_bound(8, 3, 2));
}

TEST_CASE("hilton bound by exhaustive search at n=4, k=2, m=2") {
  // two families A, B of 2-subsets of [4] with every A meeting every B; max |A|+|B|
  std::vector<std::uint64_t> subsets;
  for (std::uint64_t m = 0; m < 16; ++m)
    if (std::popcount(m) == 2) subsets.push_back(m);
  std::size_t best = 0;
  for (std::uint64_t fa = 0; fa < 64; ++fa)
    for (std::uint64_t fb = 0; fb < 64; ++fb) {
      bool ok = true;
      for (std::size_t i = 0; i < 6 && ok; ++i)
        for (std::size_t j = 0; j < 6 && ok; ++j)
          if (((fa >> i) & 1u) && ((fb >> j) & 1u) && !(subsets[i] & subsets[j])) ok = false;
      if (ok && fa && fb) best = std::max<std::size_t>(best, std::popcount(fa) + std::popcount(fb));
    }
  CHECK(hilton_bound(4, 2, 2) == BigNat(best));
}

}
