#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crossint/bigraph.hpp"
#include "crossint/groupact.hpp"
#include "crossint/oracle.hpp"

namespace crossint {

struct FragmentRecord {
  Side side = Side::X;
  VertexSet members;
  std::size_t nbhd_size = 0;
  bool is_trivial = false;  // singleton, or side \ N(v) for an opposite vertex v
  bool is_balanced = false;  // |A| = |φ(A)|
  std::optional<bool> is_semi_imprimitive;  // set when an action is supplied and 1 < |A| < part

  std::size_t size() const { return members.size(); }
};

struct EnumerationMode {
  bool exhaustive = true;
  std::size_t max_size = 0;  // bounded mode only

  static EnumerationMode full() { return {true, 0}; }
  static EnumerationMode bounded(std::size_t k) { return {false, k}; }
};

struct TwoFragmentGraph {
  enum class Kind { Isolated, Complete, Cycle, Other };
  struct Component {
    std::vector<std::size_t> vertices;
    std::size_t edges = 0;
    Kind kind = Kind::Isolated;
  };

  Side side = Side::X;
  std::size_t order = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<Component> components;  // sorted by smallest vertex

  // "empty", "5-cycle", "3 x K2", "2 x 4-cycle + 1 x other(6)", ...
  std::string summary() const;
};

struct ClosureReport {
  bool a_is_fragment = false;
  bool b_is_fragment = false;
  bool intersection_nonempty = false;
  bool union_nbhd_not_full = false;  // plain form; the translate form uses size_condition instead
  bool size_condition = false;       // |A| <= |φ(A)| (translate form only)
  bool hypotheses_hold = false;
  std::optional<bool> intersection_is_fragment;  // evaluated when hypotheses hold
  std::optional<bool> union_is_fragment;
  bool conclusion_holds() const {
    return hypotheses_hold && intersection_is_fragment.value_or(false) && union_is_fragment.value_or(false);
  }
};

struct CayleyIdentityReport {
  bool neighborhood_matches = false;  // N(S) = G_t S
  std::size_t product_outside = 0;    // |G_t S* \ G_t|
  std::size_t s_star = 0;             // |S*|
  bool fragment_condition() const { return product_outside == s_star; }
};

// ε, fragments and φ on a fixed non-complete graph. α is computed once by the
// matching oracle (or supplied).
class FragmentCalculus {
 public:
  explicit FragmentCalculus(const BipartiteGraph& g, const GroupAction* action = nullptr, unsigned workers = 1);
  FragmentCalculus(const BipartiteGraph& g, std::size_t alpha, const GroupAction* action = nullptr);

  const BipartiteGraph& graph() const { return g_; }
  std::size_t alpha() const { return alpha_; }
  // |opposite part| - α; may be negative on the larger part.
  long long epsilon(Side side) const;

  // Throws std::invalid_argument on an empty set.
  bool is_fragment(const VertexSet& s) const;
  // Throws std::invalid_argument unless s is a fragment.
  FragmentRecord classify(const VertexSet& s) const;
  // Opposite-side fragment side \ N(A); checks N(φ(A)) is the complement of A.
  FragmentRecord phi(const FragmentRecord& f) const;

  // Throws BudgetExceeded when exhaustive mode meets a part larger than max_exhaustive_part.
  std::vector<FragmentRecord> enumerate(Side side, EnumerationMode mode, std::size_t max_exhaustive_part = 24) const;

  TwoFragmentGraph two_fragment_graph(Side side) const;

  // If A, B are fragments on one side with A∩B nonempty and N(A∪B) not the
  // whole opposite part, are A∩B and A∪B fragments?
  ClosureReport check_closure(const VertexSet& a, const VertexSet& b) const;
  // The group-translate form: B = γ(A) with ∅ ≠ A∩γ(A) ≠ A and |A| <= |φ(A)|.
  ClosureReport check_translate_closure(const VertexSet& a, const VertexSet& translate) const;

 private:
  const BipartiteGraph& g_;
  const GroupAction* action_;
  std::size_t alpha_;
};

// Free-function forms; each computes α with the oracle.
long long epsilon(const BipartiteGraph& g, Side side);
bool is_fragment(const BipartiteGraph& g, const VertexSet& s);

// For a permutation graph and S containing the identity: checks
// N(S) = G_t·S by composition and measures |G_t S* \ G_t| against |S*|.
CayleyIdentityReport cayley_neighborhood_identity(const BipartiteGraph& g, const VertexSet& s);

}  // namespace crossint
