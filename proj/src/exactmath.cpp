#include "crossint/exactmath.hpp"

#include <algorithm>
#include <limits>

namespace crossint {

BigNat BigNat::from_string(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("not a nonnegative integer: '" + s + "'");
  return BigNat(Rep(s));
}

std::uint64_t BigNat::to_u64() const {
  if (v_ > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("BigNat does not fit in 64 bits");
  return static_cast<std::uint64_t>(v_);
}

BigNat& BigNat::operator-=(const BigNat& o) {
  if (v_ < o.v_) throw std::domain_error("BigNat subtraction would go negative");
  v_ -= o.v_;
  return *this;
}

BigNat BigNat::exact_div(const BigNat& d) const {
  if (d.v_.is_zero()) throw std::domain_error("division by zero");
  Rep q, r;
  boost::multiprecision::divide_qr(v_, d.v_, q, r);
  if (!r.is_zero()) throw std::domain_error("inexact division: " + v_.str() + " / " + d.v_.str());
  return BigNat(std::move(q));
}

BigNat BigNat::pow(unsigned e) const { return BigNat(boost::multiprecision::pow(v_, e)); }

BigNat factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigNat r = 1;
  for (int i = 2; i <= n; ++i) r *= BigNat(static_cast<std::uint64_t>(i));
  return r;
}

BigNat binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  // Running product stays integral: r_i = C(n-k+i, i).
  BigNat r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= BigNat(static_cast<std::uint64_t>(n - k + i));
    r = r.exact_div(BigNat(static_cast<std::uint64_t>(i)));
  }
  return r;
}

BigNat gaussian_binomial(int n, int k, int q) {
  if (q < 2) throw std::invalid_argument("gaussian_binomial: q must be >= 2");
  if (n < 0) throw std::invalid_argument("gaussian_binomial: n must be >= 0");
  if (k < 0 || k > n) return 0;
  const BigNat bq(static_cast<std::uint64_t>(q));
  BigNat num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= bq.pow(static_cast<unsigned>(n - i)) - 1;
    den *= bq.pow(static_cast<unsigned>(k - i)) - 1;
  }
  return num.exact_div(den);
}

BigNat derangements(int n) {
  if (n < 0) throw std::invalid_argument("derangements: n must be >= 0");
  BigNat prev2 = 1, prev1 = 0;  // D_0, D_1
  if (n == 0) return prev2;
  for (int i = 2; i <= n; ++i) {
    BigNat cur = BigNat(static_cast<std::uint64_t>(i - 1)) * (prev1 + prev2);
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

BigNat set_degree(int n, int a, int b, int t) {
  if (t < 1) throw std::invalid_argument("set_degree: t >= 1 violated");
  if (a < 0 || b < 0 || a > n || b > n) throw std::invalid_argument("set_degree: need 0 <= a,b <= n");
  BigNat sum = 0;
  for (int i = 0; i < t; ++i) sum += binomial(a, i) * binomial(n - a, b - i);
  return sum;
}

BigNat subspace_degree(int n, int q, int a, int b, int t) {
  if (q < 2) throw std::invalid_argument("subspace_degree: q must be >= 2");
  if (t < 1) throw std::invalid_argument("subspace_degree: t >= 1 violated");
  if (a < 0 || b < 0 || a > n || b > n) throw std::invalid_argument("subspace_degree: need 0 <= a,b <= n");
  const BigNat bq(static_cast<std::uint64_t>(q));
  BigNat sum = 0;
  for (int i = 0; i < t && i <= a && i <= b; ++i)
    sum += bq.pow(static_cast<unsigned>((a - i) * (b - i))) * gaussian_binomial(a, i, q) *
           gaussian_binomial(n - a, b - i, q);
  return sum;
}

BigNat permutation_degree(int n, int t) {
  if (t < 1 || t > n - 2) throw HypothesisError("1 <= t <= n-2", "1 <= t <= n-2 violated");
  BigNat sum = 0;
  for (int i = 0; i < t; ++i) sum += binomial(n, i) * derangements(n - i);
  return sum;
}

namespace {

[[noreturn]] void violated(const std::string& name) { throw HypothesisError(name, name + " violated"); }

}  // namespace

void check_sets_hypotheses(int n, int a, int b, int t) {
  if (t < 1) violated("t >= 1");
  if (n < 4) violated("n >= 4");
  if (a < 2 || b < 2) violated("a,b >= 2");
  if (a > n || b > n) violated("a,b <= n");
  if (t >= std::min(a, b)) violated("t < min(a,b)");
  if (a + b >= n + t) violated("a+b < n+t");
  if (n == a + b && t == 1) throw HypothesisError("(n,t) != (a+b,1)", "(n,t)=(a+b,1) excluded");
  if (binomial(n, a) > binomial(n, b)) violated("C(n,a) <= C(n,b)");
}

void check_subspaces_hypotheses(int n, int q, int a, int b, int t) {
  if (q < 2) violated("q >= 2");
  if (t < 1) violated("t >= 1");
  if (n < 4) violated("n >= 4");
  if (a < 2 || b < 2) violated("a,b >= 2");
  if (a > n || b > n) violated("a,b <= n");
  if (t >= std::min(a, b)) violated("t < min(a,b)");
  if (a + b >= n + t) violated("a+b < n+t");
  if (gaussian_binomial(n, a, q) > gaussian_binomial(n, b, q)) violated("[n a]_q <= [n b]_q");
}

void check_permutations_hypotheses(int n, int t) {
  if (n < 4) violated("n >= 4");
  if (t < 1 || t > n - 2) violated("1 <= t <= n-2");
}

BigNat cross_bound_sets_unchecked(int n, int a, int b, int t) {
  return binomial(n, b) + 1 - set_degree(n, a, b, t);
}

BigNat cross_bound_subspaces_unchecked(int n, int q, int a, int b, int t) {
  return gaussian_binomial(n, b, q) + 1 - subspace_degree(n, q, a, b, t);
}

BigNat cross_bound_permutations_unchecked(int n, int t) { return factorial(n) + 1 - permutation_degree(n, t); }

BigNat cross_bound_sets(int n, int a, int b, int t) {
  check_sets_hypotheses(n, a, b, t);
  return cross_bound_sets_unchecked(n, a, b, t);
}

BigNat cross_bound_subspaces(int n, int q, int a, int b, int t) {
  check_subspaces_hypotheses(n, q, a, b, t);
  return cross_bound_subspaces_unchecked(n, q, a, b, t);
}

BigNat cross_bound_permutations(int n, int t) {
  check_permutations_hypotheses(n, t);
  return cross_bound_permutations_unchecked(n, t);
}

BigNat hilton_bound(int n, int k, int m) {
  if (k < 1 || 2 * k > n) violated("1 <= k <= n/2");
  if (m < 1) violated("m >= 1");
  if (static_cast<long long>(m) * k <= n) return binomial(n, k);
  return BigNat(static_cast<std::uint64_t>(m)) * binomial(n - 1, k - 1);
}

BigNat hm_ft_bound(int n, int a, int b) {
  if (a < 1) violated("a >= 1");
  if (n < a + b) violated("n >= a+b");
  if (a > b) violated("a <= b");
  return binomial(n, b) + 1 - binomial(n - a, b);
}

}  // namespace crossint
