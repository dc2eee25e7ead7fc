#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace crossint {

// Arbitrary-precision nonnegative integer. Subtraction below zero and
// inexact division throw std::domain_error.
class BigNat {
 public:
  using Rep = boost::multiprecision::cpp_int;

  BigNat() = default;
  BigNat(std::uint64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  static BigNat from_string(const std::string& s);

  const Rep& rep() const { return v_; }
  std::string str() const { return v_.str(); }
  bool is_zero() const { return v_.is_zero(); }
  // Throws std::overflow_error if the value does not fit.
  std::uint64_t to_u64() const;

  BigNat& operator+=(const BigNat& o) {
    v_ += o.v_;
    return *this;
  }
  BigNat& operator*=(const BigNat& o) {
    v_ *= o.v_;
    return *this;
  }
  BigNat& operator-=(const BigNat& o);

  friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
  friend BigNat operator*(BigNat a, const BigNat& b) { return a *= b; }
  friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }

  // Exact division; throws if divisor is zero or does not divide.
  BigNat exact_div(const BigNat& d) const;
  BigNat pow(unsigned e) const;

  friend bool operator==(const BigNat& a, const BigNat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigNat& n) { return os << n.v_; }

 private:
  explicit BigNat(Rep v) : v_(std::move(v)) {}
  Rep v_;
};

// A violated theorem side condition. hypothesis() names the condition.
class HypothesisError : public std::invalid_argument {
 public:
  HypothesisError(std::string hypothesis, const std::string& message)
      : std::invalid_argument(message), hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

BigNat factorial(int n);
BigNat binomial(int n, int k);
// Number of k-dimensional subspaces of F_q^n (q is only required to be >= 2).
BigNat gaussian_binomial(int n, int k, int q);
BigNat derangements(int n);

// Vertex degree of the a-side in the cross-t-intersecting graph of a-subsets
// and b-subsets of [n]: number of b-sets meeting a fixed a-set in < t points.
BigNat set_degree(int n, int a, int b, int t);
// Same for a-subspaces and b-subspaces of F_q^n with dim(A∩B) < t.
BigNat subspace_degree(int n, int q, int a, int b, int t);
// Number of permutations of [n] with fewer than t fixed points.
BigNat permutation_degree(int n, int t);

// Upper bounds on |A|+|B| for cross-t-intersecting pairs. The checked forms
// throw HypothesisError naming the first violated side condition.
BigNat cross_bound_sets(int n, int a, int b, int t);
BigNat cross_bound_subspaces(int n, int q, int a, int b, int t);
BigNat cross_bound_permutations(int n, int t);

// Raw formula values without side-condition checks.
BigNat cross_bound_sets_unchecked(int n, int a, int b, int t);
BigNat cross_bound_subspaces_unchecked(int n, int q, int a, int b, int t);
BigNat cross_bound_permutations_unchecked(int n, int t);

// Hypothesis checks on their own (no-op when all conditions hold).
void check_sets_hypotheses(int n, int a, int b, int t);
void check_subspaces_hypotheses(int n, int q, int a, int b, int t);
void check_permutations_hypotheses(int n, int t);

// Bound on the total size of m cross-intersecting families of k-subsets of [n].
BigNat hilton_bound(int n, int k, int m);
// Bound on |A|+|B| for cross-intersecting A ⊂ C([n],a), B ⊂ C([n],b), n >= a+b, a <= b.
BigNat hm_ft_bound(int n, int a, int b);

}  // namespace crossint
