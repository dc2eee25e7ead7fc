#include <doctest.h>

#include <algorithm>

#include "crossint/exactmath.hpp"
#include "crossint/fqlinalg.hpp"
#include "oracles.hpp"

using namespace crossint;

TEST_SUITE("fqlinalg") {

TEST_CASE("prime field axioms") {
  CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    PrimeField f(p);
    for (std::uint32_t a = 0; a < p; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      for (std::uint32_t b = 0; b < p; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.sub(f.add(a, b), b) == a);
        for (std::uint32_t c = 0; c < p; ++c) CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
    CHECK_THROWS_AS(f.inv(0), std::domain_error);
    // primitive root has order p-1
    const auto g = f.primitive_root();
    std::uint32_t x = 1, order = 0;
    do {
      x = f.mul(x, g);
      ++order;
    } while (x != 1);
    CHECK(order == p - 1);
  }
}

TEST_CASE("rank") {
  PrimeField f2(2);
  CHECK(rank(f2, {{0, 0, 0}, {0, 0, 0}}) == 0);
  CHECK(rank(f2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 3);
  CHECK(rank(f2, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}) == 2);
  PrimeField f3(3);
  CHECK(rank(f3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}) == 3);
  CHECK(rank(f3, {}) == 0);
}

TEST_CASE("rref canonical form") {
  PrimeField f3(3);
  RrefSubspace a(f3, 3, {{2, 1, 0}, {1, 1, 1}});
  RrefSubspace b(f3, 3, {{1, 1, 1}, {0, 1, 2}, {2, 1, 0}});
  CHECK(a.dim() == 2);
  CHECK(a == b);
  for (const auto& row : a.rows()) CHECK(std::count_if(row.begin(), row.end(), [](auto v) { return v != 0; }) >= 1);
  const auto piv = a.pivots();
  CHECK(std::is_sorted(piv.begin(), piv.end()));
  CHECK(RrefSubspace(f3, 3, a.rows()) == a);
  CHECK_THROWS(RrefSubspace(f3, 3, {{1, 2}}));
  CHECK_THROWS(RrefSubspace(f3, 3, {{1, 2, 3}}));
}

TEST_CASE("subspace enumeration") {
  CHECK(enumerate_subspaces(2, 2, 1).size() == 3);
  CHECK(enumerate_subspaces(4, 2, 2).size() == 35);
  CHECK(enumerate_subspaces(3, 3, 1).size() == 13);
  CHECK(enumerate_subspaces(3, 2, 0).size() == 1);
  CHECK_THROWS_AS(enumerate_subspaces(3, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_subspaces(8, 3, 4, 1000), std::length_error);

  const auto lines = enumerate_subspaces(2, 2, 1);
  std::vector<FqMatrix> want{{{0, 1}}, {{1, 0}}, {{1, 1}}};
  std::vector<FqMatrix> got;
  for (const auto& l : lines) got.push_back(l.rows());
  std::sort(got.begin(), got.end());
  CHECK(got == want);

  for (int q : {2, 3})
    for (int n = 1; n <= 4; ++n)
      for (int k = 0; k <= n; ++k) {
        const auto subs = enumerate_subspaces(n, q, k);
        REQUIRE(BigNat(subs.size()) == gaussian_binomial(n, k, q));
        REQUIRE(std::is_sorted(subs.begin(), subs.end()));
        // same subspaces as the span oracle
        std::set<oracle::PointSet> pts;
        for (const auto& s : subs) pts.insert(oracle::points_of(s));
        REQUIRE(pts == oracle::subspaces_by_span(n, q, k));
        for (const auto& s : subs) REQUIRE(RrefSubspace(s.field(), s.ambient_dim(), s.rows()) == s);
      }
}

TEST_CASE("intersection dimension") {
  PrimeField f2(2);
  const auto planes = enumerate_subspaces(4, 2, 2);
  for (const auto& a : planes) CHECK(intersection_dim(a, a) == 2);
  const auto lines = enumerate_subspaces(2, 2, 1);
  CHECK(intersection_dim(lines[0], lines[1]) == 0);
  CHECK_THROWS(intersection_dim(planes[0], lines[0]));

  // a fixed plane meets exactly q^{(a-i)(b-i)} [a i] [n-a, b-i] planes in dimension i
  const int expect[3] = {16, 18, 1};
  for (std::size_t ai = 0; ai < planes.size(); ai += 7) {
    int count[3] = {0, 0, 0};
    const auto pa = oracle::points_of(planes[ai]);
    for (const auto& b : planes) {
      const int d = intersection_dim(planes[ai], b);
      ++count[d];
      const auto pb = oracle::points_of(b);
      std::size_t common = 0;
      for (std::size_t i = 0; i < pa.size(); ++i) common += pa[i] && pb[i];
      REQUIRE(d == oracle::log_q(common, 2));
    }
    CHECK(count[0] == expect[0]);
    CHECK(count[1] == expect[1]);
    CHECK(count[2] == expect[2]);
  }

  const auto lines3 = enumerate_subspaces(3, 3, 1);
  const auto planes3 = enumerate_subspaces(3, 3, 2);
  for (const auto& a : lines3)
    for (const auto& b : planes3) {
      const int d = intersection_dim(a, b);
      CHECK(d == intersection_dim(b, a));
      CHECK(d >= 0);
      CHECK(d <= 1);
    }
}

TEST_CASE("transformed and label") {
  PrimeField f2(2);
  RrefSubspace s(f2, 4, {{1, 0, 1, 0}, {0, 1, 0, 1}});
  CHECK(s.label() == "[1 0 1 0/0 1 0 1]");
  FqMatrix id(4, std::vector<PrimeField::Elem>(4, 0));
  for (int i = 0; i < 4; ++i) id[i][i] = 1;
  CHECK(s.transformed(id) == s);
  FqMatrix swap = id;
  std::swap(swap[0], swap[1]);
  auto t = s.transformed(swap);
  CHECK(t.dim() == 2);
  CHECK(t.transformed(swap) == s);
}

}
