#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace crossint {

// Arithmetic modulo a prime p.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  // Throws std::invalid_argument if p is not prime.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t order() const { return p_; }
  Elem add(Elem a, Elem b) const { return (a + b) % p_; }
  Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
  Elem neg(Elem a) const { return (p_ - a) % p_; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  // Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  // Smallest generator of the multiplicative group.
  Elem primitive_root() const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

using FqMatrix = std::vector<std::vector<PrimeField::Elem>>;

// Row rank by Gaussian elimination.
int rank(const PrimeField& field, FqMatrix rows);

// Reduced row-echelon form with zero rows removed.
FqMatrix rref(const PrimeField& field, FqMatrix rows);

// A subspace of F_p^n stored as its RREF basis (a canonical form).
class RrefSubspace {
 public:
  // Row-reduces the given spanning rows; the dimension is their rank.
  RrefSubspace(const PrimeField& field, std::size_t n, FqMatrix rows);

  const PrimeField& field() const { return field_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const FqMatrix& rows() const { return rows_; }
  std::vector<std::size_t> pivots() const;

  // Image under v -> v*M for an invertible n x n matrix M.
  RrefSubspace transformed(const FqMatrix& m) const;

  // Entries as "[r0/r1/...]" with space-separated entries.
  std::string label() const;

  friend bool operator==(const RrefSubspace& a, const RrefSubspace& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.rows_ == b.rows_;
  }
  // Enumeration order: pivot-column set, then row entries.
  friend bool operator<(const RrefSubspace& a, const RrefSubspace& b);

 private:
  struct Canonical {};
  RrefSubspace(Canonical, const PrimeField& field, std::size_t n, FqMatrix rows)
      : field_(field), n_(n), rows_(std::move(rows)) {}
  friend std::vector<RrefSubspace> enumerate_subspaces(std::size_t, std::uint32_t, std::size_t,
                                                       std::uint64_t);

  PrimeField field_;
  std::size_t n_;
  FqMatrix rows_;
};

// dim(A ∩ B) = dim A + dim B - rank([A; B]). Throws on mismatched ambients.
int intersection_dim(const RrefSubspace& a, const RrefSubspace& b);

constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 14;

// All k-subspaces of F_q^n in (pivot set, entries) lexicographic order,
// generated directly as RREF matrices. Throws std::length_error when the
// count exceeds budget.
std::vector<RrefSubspace> enumerate_subspaces(std::size_t n, std::uint32_t q, std::size_t k,
                                              std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace crossint
