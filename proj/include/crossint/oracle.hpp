#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crossint/bigraph.hpp"

namespace crossint {

inline constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

struct MatchingResult {
  std::size_t size = 0;
  std::vector<std::size_t> mate_x;  // X index -> Y index or kUnmatched
  std::vector<std::size_t> mate_y;  // Y index -> X index or kUnmatched
};

// Maximum matching by Hopcroft-Karp (layered BFS phases, DFS augmentation in
// index order). The masked form restricts both parts to the active vertices.
MatchingResult max_matching(const BipartiteGraph& g);
MatchingResult max_matching(const BipartiteGraph& g, const BitVec& active_x, const BitVec& active_y);

struct IndependentSet {
  std::size_t size = 0;
  VertexSet a;  // X side
  VertexSet b;  // Y side
};

// Maximum independent set as the complement of a König minimum vertex cover.
IndependentSet max_independent_set(const BipartiteGraph& g);
IndependentSet max_independent_set(const BipartiteGraph& g, const BitVec& active_x, const BitVec& active_y);

struct NontrivialMisResult {
  std::size_t size = 0;
  VertexSet witness_a;  // nonempty, X side
  VertexSet witness_b;  // nonempty, Y side
  std::size_t x = 0;    // the non-adjacent pair that produced the witness
  std::size_t y = 0;
};

class CompleteGraphError : public std::domain_error {
 public:
  CompleteGraphError() : std::domain_error("graph is complete: no nontrivial independent set exists") {}
};

// Exact α(X,Y): over every non-adjacent (x,y), the best independent set of
// G - N(x) - N(y). Ties go to the lexicographically least (x,y).
// workers = 0 picks the hardware concurrency.
NontrivialMisResult alpha_nontrivial(const BipartiteGraph& g, unsigned workers = 1);

struct EnumerationLimits {
  std::size_t max_vertices = 256;         // |X|+|Y|
  std::size_t max_search_nodes = 1'000'000;
};

// Every maximum nontrivial independent set, sorted by (A, B).
// Throws BudgetExceeded if the graph is too large and CapExceeded-style
// std::length_error if the search exceeds max_search_nodes.
std::vector<NontrivialMisResult> enumerate_max_nontrivial(const BipartiteGraph& g, EnumerationLimits limits = {});

// min |N(A)| - |A| over nonempty A ⊆ side with N(A) != other side, by
// exhaustive search. Throws BudgetExceeded when the part exceeds max_part,
// std::domain_error when no A qualifies.
long long epsilon_bruteforce(const BipartiteGraph& g, Side side, std::size_t max_part = 24);

}  // namespace crossint
