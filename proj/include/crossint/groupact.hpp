#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "crossint/bigraph.hpp"

namespace crossint {

// A bijection of the vertex indices of one part.
class PartPermutation {
 public:
  // Throws std::invalid_argument unless images is a bijection of {0..n-1}.
  explicit PartPermutation(std::vector<std::uint32_t> images);
  static PartPermutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::uint32_t operator()(std::size_t v) const { return images_[v]; }
  const std::vector<std::uint32_t>& images() const { return images_; }
  BitVec apply(const BitVec& s) const;
  bool is_identity() const;

  friend bool operator==(const PartPermutation&, const PartPermutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct GeneratorPair {
  PartPermutation gx;
  PartPermutation gy;
};

// A group acting on both parts of a bipartite graph, given by generators.
// Construction checks x~y <=> gx(x)~gy(y) for every generator.
class GroupAction {
 public:
  GroupAction(const BipartiteGraph& g, std::vector<GeneratorPair> generators);

  const std::vector<GeneratorPair>& generators() const { return gens_; }
  std::size_t part_size(Side s) const { return s == Side::X ? nx_ : ny_; }
  const PartPermutation& generator(std::size_t i, Side s) const { return s == Side::X ? gens_[i].gx : gens_[i].gy; }

 private:
  std::size_t nx_, ny_;
  std::vector<GeneratorPair> gens_;
};

class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Natural S_n action for graphs built by build_set_graph, build_permutation_graph
// (two-sided multiplication) and build_circulant_graph (rotation).
GroupAction induced_symmetric_action(const BipartiteGraph& g);
// Natural GL(n,q) action on a graph built by build_subspace_graph.
GroupAction induced_gl_action(const BipartiteGraph& g);
// Whichever of the two above matches g's family.
GroupAction induced_action(const BipartiteGraph& g);

// Multiplication by (1 2) and (1 2 ... n) on a permutation graph, on the
// left (σ -> gσ), on the right (σ -> σg), or both.
GroupAction permutation_multiplication_action(const BipartiteGraph& g, bool left, bool right);

VertexSet orbit(const GroupAction& action, Side side, std::size_t v);
bool is_part_transitive(const BipartiteGraph& g, const GroupAction& action);

// Blocks sorted by smallest member; each block sorted.
using Partition = std::vector<std::vector<std::size_t>>;

// Finest invariant partition of the side in which u and v share a block.
Partition minimal_block_system(const GroupAction& action, Side side, std::size_t u, std::size_t v);
bool is_primitive(const GroupAction& action, Side side);

constexpr std::size_t kDefaultOrbitCap = 1'000'000;

// Closure of {B} under the setwise generator images, sorted canonically.
// Throws CapExceeded when more than cap sets are reached.
std::vector<VertexSet> set_orbit(const GroupAction& action, const VertexSet& b, std::size_t cap = kDefaultOrbitCap);

// |γ(B) ∩ B| ∈ {0, 1, |B|} for every γ. Requires 1 < |B| < part size.
bool is_semi_imprimitive(const GroupAction& action, const VertexSet& b, std::size_t cap = kDefaultOrbitCap);
// γ(B) ∩ B ∈ {∅, B} for every γ, with 1 < |B| < part size (false otherwise).
bool is_imprimitive_set(const GroupAction& action, const VertexSet& b, std::size_t cap = kDefaultOrbitCap);

}  // namespace crossint
