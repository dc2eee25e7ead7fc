#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "crossint/bitvec.hpp"

namespace crossint {

enum class Side { X, Y };

inline Side opposite(Side s) { return s == Side::X ? Side::Y : Side::X; }
inline const char* side_name(Side s) { return s == Side::X ? "X" : "Y"; }

// A subset of one part of a bipartite graph.
struct VertexSet {
  Side side = Side::X;
  BitVec bits;

  std::size_t size() const { return bits.count(); }
  bool empty() const { return bits.none(); }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

enum class Family { Custom, Sets, Subspaces, Permutations, Circulant };

// Which builder produced a graph, and with what parameters.
struct FamilyInfo {
  Family family = Family::Custom;
  std::vector<int> params;

  // e.g. "sets(5,2,2,1)"; "custom" for graphs not made by a builder.
  std::string name() const;
};

const char* family_name(Family f);
// Accepts "sets", "subspaces", "permutations"/"perms", "circulant". Throws on anything else.
Family parse_family(std::string_view name);

class BipartiteGraph {
 public:
  // adj_x[i] is the row of X-vertex i over Y. Throws std::invalid_argument on
  // empty parts, row-length mismatch or duplicate labels.
  BipartiteGraph(std::vector<std::string> x_labels, std::vector<std::string> y_labels, std::vector<BitVec> adj_x,
                 FamilyInfo family = {});

  // Labels x1..xn / y1..ym.
  static BipartiteGraph from_rows(std::size_t nx, std::size_t ny, std::vector<BitVec> adj_x);

  std::size_t size(Side s) const { return s == Side::X ? x_labels_.size() : y_labels_.size(); }
  std::size_t x_size() const { return x_labels_.size(); }
  std::size_t y_size() const { return y_labels_.size(); }
  const std::vector<std::string>& labels(Side s) const { return s == Side::X ? x_labels_ : y_labels_; }
  const BitVec& row(Side s, std::size_t v) const { return s == Side::X ? adj_x_[v] : adj_y_[v]; }
  const std::vector<BitVec>& rows(Side s) const { return s == Side::X ? adj_x_ : adj_y_; }
  bool adjacent(std::size_t x, std::size_t y) const { return adj_x_[x].test(y); }
  std::size_t degree(Side s, std::size_t v) const { return row(s, v).count(); }
  std::size_t edge_count() const;
  const FamilyInfo& family() const { return family_; }

  VertexSet empty_set(Side s) const { return {s, BitVec(size(s))}; }
  VertexSet full_set(Side s) const { return {s, BitVec::full(size(s))}; }
  VertexSet singleton(Side s, std::size_t v) const;

  // N(S), tagged with the opposite side. N(∅) = ∅.
  VertexSet neighborhood(const VertexSet& s) const;
  BitVec neighborhood(Side s, const BitVec& members) const;

  bool is_complete() const;
  bool is_connected() const;

  struct Biregularity {
    bool regular = false;
    std::size_t dx = 0;
    std::size_t dy = 0;
  };
  // dx/dy are only meaningful when regular is true.
  Biregularity biregularity() const;

  // Swap the roles of X and Y.
  BipartiteGraph transposed() const;

  std::string set_label(const VertexSet& s) const;

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.x_labels_ == b.x_labels_ && a.y_labels_ == b.y_labels_ && a.adj_x_ == b.adj_x_;
  }

 private:
  std::vector<std::string> x_labels_, y_labels_;
  std::vector<BitVec> adj_x_, adj_y_;
  FamilyInfo family_;
};

// Builders refuse to allocate parts larger than this.
struct BuildBudget {
  std::uint64_t vertices_per_part = std::uint64_t{1} << 14;
};

class BudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// a-subsets vs b-subsets of [n], edge iff |A∩B| < t.
BipartiteGraph build_set_graph(int n, int a, int b, int t, BuildBudget budget = {});
// a- vs b-subspaces of F_q^n (q prime), edge iff dim(A∩B) < t.
BipartiteGraph build_subspace_graph(int n, int q, int a, int b, int t, BuildBudget budget = {});
// S_n vs S_n, edge iff σ and τ agree on fewer than t points.
BipartiteGraph build_permutation_graph(int n, int t, BuildBudget budget = {});
// x_i ~ y_j iff j ∈ {i, ..., i+r-1} mod n.
BipartiteGraph build_circulant_graph(int n, int r);

// Builds a family graph from its parameter list (arity checked).
BipartiteGraph build_family_graph(Family family, const std::vector<int>& params, BuildBudget budget = {});

// k-subsets of {0..n-1} as bit words, in lexicographic order of element lists.
std::vector<std::uint64_t> subsets_lex(int n, int k);
std::string subset_label(std::uint64_t word);

// Permutations of {0..n-1} (one-line images) in lexicographic order.
std::vector<std::vector<int>> permutations_lex(int n);
// One-line notation, 1-based: "[2 1 3 4]".
std::string permutation_label(const std::vector<int>& perm);
// Inverse of permutation_label. Throws std::invalid_argument.
std::vector<int> parse_permutation_label(std::string_view label);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Text format: "<|X|> <|Y|>", one hex row per X vertex (bit j = y_{j+1},
// ceil(|Y|/4) uppercase digits), then the X labels and Y labels, each
// comma-separated on one line.
std::string serialize(const BipartiteGraph& g);
BipartiteGraph deserialize(std::string_view text);

}  // namespace crossint
