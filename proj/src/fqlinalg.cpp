#include "crossint/fqlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "crossint/exactmath.hpp"

namespace crossint {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("field order " + std::to_string(p) + " is not prime");
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  a %= p_;
  if (a == 0) throw std::domain_error("inverse of zero");
  // Fermat: a^(p-2).
  Elem result = 1, base = a;
  for (std::uint32_t e = p_ - 2; e; e >>= 1) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

PrimeField::Elem PrimeField::primitive_root() const {
  if (p_ == 2) return 1;
  std::vector<std::uint32_t> factors;
  std::uint32_t m = p_ - 1;
  for (std::uint32_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (Elem g = 2; g < p_; ++g) {
    bool ok = true;
    for (auto f : factors) {
      Elem r = 1, base = g;
      for (std::uint32_t e = (p_ - 1) / f; e; e >>= 1) {
        if (e & 1u) r = mul(r, base);
        base = mul(base, base);
      }
      if (r == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root found");
}

FqMatrix rref(const PrimeField& f, FqMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const auto inv = f.inv(rows[r][c]);
    for (auto& e : rows[r]) e = f.mul(e, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const auto factor = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

int rank(const PrimeField& field, FqMatrix rows) { return static_cast<int>(rref(field, std::move(rows)).size()); }

RrefSubspace::RrefSubspace(const PrimeField& field, std::size_t n, FqMatrix rows) : field_(field), n_(n) {
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("row length does not match ambient dimension");
    for (auto e : row)
      if (e >= field.order()) throw std::invalid_argument("entry outside the field");
  }
  rows_ = rref(field, std::move(rows));
}

std::vector<std::size_t> RrefSubspace::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& row : rows_) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    out.push_back(c);
  }
  return out;
}

RrefSubspace RrefSubspace::transformed(const FqMatrix& m) const {
  FqMatrix image(rows_.size(), std::vector<PrimeField::Elem>(n_, 0));
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      if (rows_[i][k] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) image[i][j] = field_.add(image[i][j], field_.mul(rows_[i][k], m[k][j]));
    }
  return RrefSubspace(field_, n_, std::move(image));
}

std::string RrefSubspace::label() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) os << '/';
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) os << ' ';
      os << rows_[i][j];
    }
  }
  os << ']';
  return os.str();
}

bool operator<(const RrefSubspace& a, const RrefSubspace& b) {
  auto pa = a.pivots(), pb = b.pivots();
  if (pa != pb) return pa < pb;
  return a.rows_ < b.rows_;
}

int intersection_dim(const RrefSubspace& a, const RrefSubspace& b) {
  if (!(a.field() == b.field()) || a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersection_dim: subspaces live in different ambient spaces");
  FqMatrix stacked = a.rows();
  stacked.insert(stacked.end(), b.rows().begin(), b.rows().end());
  return static_cast<int>(a.dim() + b.dim()) - rank(a.field(), std::move(stacked));
}

std::vector<RrefSubspace> enumerate_subspaces(std::size_t n, std::uint32_t q, std::size_t k,
                                              std::uint64_t budget) {
  const PrimeField field(q);
  if (k > n) throw std::invalid_argument("enumerate_subspaces: k > n");
  const BigNat expected = gaussian_binomial(static_cast<int>(n), static_cast<int>(k), static_cast<int>(q));
  if (expected > BigNat(budget))
    throw std::length_error("enumerate_subspaces: " + expected.str() + " subspaces exceed budget " +
                            std::to_string(budget));

  std::vector<RrefSubspace> out;
  out.reserve(static_cast<std::size_t>(expected.to_u64()));

  // Pivot sets in lexicographic order.
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    // Free positions: (row i, column j) with j > piv[i] and j not a pivot column.
    std::vector<bool> is_pivot(n, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = piv[i] + 1; j < n; ++j)
        if (!is_pivot[j]) free.emplace_back(i, j);

    FqMatrix m(k, std::vector<PrimeField::Elem>(n, 0));
    for (std::size_t i = 0; i < k; ++i) m[i][piv[i]] = 1;
    // Odometer over free entries; the last free position varies fastest so
    // that row entries come out in lexicographic order.
    while (true) {
      out.push_back(RrefSubspace(RrefSubspace::Canonical{}, field, n, m));
      std::size_t pos = free.size();
      while (pos > 0) {
        auto [i, j] = free[pos - 1];
        if (++m[i][j] < q) break;
        m[i][j] = 0;
        --pos;
      }
      if (pos == 0) break;
    }

    // Next combination.
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

}  // namespace crossint
