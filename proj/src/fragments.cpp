#include "crossint/fragments.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace crossint {

FragmentCalculus::FragmentCalculus(const BipartiteGraph& g, const GroupAction* action, unsigned workers)
    : g_(g), action_(action), alpha_(alpha_nontrivial(g, workers).size) {}

FragmentCalculus::FragmentCalculus(const BipartiteGraph& g, std::size_t alpha, const GroupAction* action)
    : g_(g), action_(action), alpha_(alpha) {
  if (g.is_complete()) throw CompleteGraphError();
}

long long FragmentCalculus::epsilon(Side side) const {
  return static_cast<long long>(g_.size(opposite(side))) - static_cast<long long>(alpha_);
}

bool FragmentCalculus::is_fragment(const VertexSet& s) const {
  if (s.empty()) throw std::invalid_argument("is_fragment: empty set");
  const BitVec n = g_.neighborhood(s.side, s.bits);
  const std::size_t cnt = n.count();
  if (cnt == g_.size(opposite(s.side))) return false;
  return static_cast<long long>(cnt) - static_cast<long long>(s.size()) == epsilon(s.side);
}

FragmentRecord FragmentCalculus::classify(const VertexSet& s) const {
  if (!is_fragment(s)) throw std::invalid_argument("classify: " + g_.set_label(s) + " is not a fragment");
  FragmentRecord r;
  r.side = s.side;
  r.members = s;
  const BitVec nb = g_.neighborhood(s.side, s.bits);
  r.nbhd_size = nb.count();
  const std::size_t k = s.size();
  const std::size_t part = g_.size(s.side);
  r.is_trivial = k == 1;
  if (!r.is_trivial) {
    // s ⊆ side \ N(v) for every v outside N(s); equality is a size check.
    nb.complement().for_each([&](std::size_t v) {
      if (part - g_.degree(opposite(s.side), v) == k) r.is_trivial = true;
    });
  }
  r.is_balanced = 2 * k == alpha_;
  if (action_ && k > 1 && k < part) {
    try {
      r.is_semi_imprimitive = is_semi_imprimitive(*action_, s);
    } catch (const CapExceeded&) {
    }
  }
  return r;
}

FragmentRecord FragmentCalculus::phi(const FragmentRecord& f) const {
  if (!is_fragment(f.members)) throw std::invalid_argument("phi: input is not a fragment");
  const Side other = opposite(f.side);
  VertexSet image{other, g_.neighborhood(f.side, f.members.bits).complement()};
  if (!(g_.neighborhood(other, image.bits) == f.members.bits.complement()))
    throw std::logic_error("phi: N(φ(A)) differs from the complement of A");
  return classify(image);
}

std::vector<FragmentRecord> FragmentCalculus::enumerate(Side side, EnumerationMode mode,
                                                        std::size_t max_exhaustive_part) const {
  const std::size_t n = g_.size(side);
  const std::size_t m = g_.size(opposite(side));
  if (mode.exhaustive && n > max_exhaustive_part)
    throw BudgetExceeded("enumerate_fragments: exhaustive census of a part of size " + std::to_string(n) +
                         " exceeds limit " + std::to_string(max_exhaustive_part));
  const std::size_t max_size = mode.exhaustive ? n : std::min(mode.max_size, n);
  const long long eps = epsilon(side);
  const auto& rows = g_.rows(side);

  std::vector<FragmentRecord> out;
  BitVec members(n);
  std::vector<BitVec> nbhd(max_size + 1, BitVec(m));
  auto visit = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
    for (std::size_t v = start; v < n; ++v) {
      nbhd[depth + 1] = nbhd[depth];
      nbhd[depth + 1] |= rows[v];
      const auto cnt = static_cast<long long>(nbhd[depth + 1].count());
      if (cnt == static_cast<long long>(m)) continue;  // supersets keep a full neighborhood
      const auto size = static_cast<long long>(depth + 1);
      members.set(v);
      if (cnt - size == eps) out.push_back(classify({side, members}));
      // Any extension A' has |N(A')| >= cnt and |A'| <= size + room.
      const auto room = static_cast<long long>(std::min(n - v - 1, max_size - (depth + 1)));
      if (depth + 1 < max_size && cnt <= eps + size + room) self(self, depth + 1, v + 1);
      members.reset(v);
    }
  };
  if (max_size > 0) visit(visit, 0, 0);
  return out;
}

std::string TwoFragmentGraph::summary() const {
  if (edges.empty()) return "empty";
  std::map<std::string, std::size_t> counts;
  for (const auto& c : components) {
    const std::size_t k = c.vertices.size();
    switch (c.kind) {
      case Kind::Isolated: break;
      case Kind::Complete: ++counts["K" + std::to_string(k)]; break;
      case Kind::Cycle: ++counts[std::to_string(k) + "-cycle"]; break;
      case Kind::Other: ++counts["other(" + std::to_string(k) + ")"]; break;
    }
  }
  std::string out;
  for (const auto& [name, cnt] : counts) {
    if (!out.empty()) out += " + ";
    out += cnt == 1 && counts.size() == 1 ? name : std::to_string(cnt) + " x " + name;
  }
  return out;
}

TwoFragmentGraph FragmentCalculus::two_fragment_graph(Side side) const {
  TwoFragmentGraph h;
  h.side = side;
  h.order = g_.size(side);
  std::vector<std::vector<std::size_t>> adj(h.order);
  for (std::size_t u = 0; u < h.order; ++u)
    for (std::size_t v = u + 1; v < h.order; ++v) {
      VertexSet pair = g_.singleton(side, u);
      pair.bits.set(v);
      if (is_fragment(pair)) {
        h.edges.emplace_back(u, v);
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
  std::vector<bool> seen(h.order, false);
  for (std::size_t s = 0; s < h.order; ++s) {
    if (seen[s]) continue;
    TwoFragmentGraph::Component c;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    std::size_t degree_sum = 0;
    bool all_degree_two = true;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      c.vertices.push_back(u);
      degree_sum += adj[u].size();
      all_degree_two = all_degree_two && adj[u].size() == 2;
      for (auto w : adj[u])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    c.edges = degree_sum / 2;
    const std::size_t k = c.vertices.size();
    if (k == 1) c.kind = TwoFragmentGraph::Kind::Isolated;
    else if (c.edges == k * (k - 1) / 2) c.kind = TwoFragmentGraph::Kind::Complete;
    else if (all_degree_two) c.kind = TwoFragmentGraph::Kind::Cycle;
    else c.kind = TwoFragmentGraph::Kind::Other;
    h.components.push_back(std::move(c));
  }
  return h;
}

ClosureReport FragmentCalculus::check_closure(const VertexSet& a, const VertexSet& b) const {
  if (a.side != b.side) throw std::invalid_argument("check_closure: sets on different sides");
  ClosureReport r;
  r.a_is_fragment = !a.empty() && is_fragment(a);
  r.b_is_fragment = !b.empty() && is_fragment(b);
  const VertexSet meet{a.side, a.bits & b.bits}, join{a.side, a.bits | b.bits};
  r.intersection_nonempty = !meet.empty();
  r.union_nbhd_not_full = !g_.neighborhood(a.side, join.bits).all();
  r.hypotheses_hold = r.a_is_fragment && r.b_is_fragment && r.intersection_nonempty && r.union_nbhd_not_full;
  if (r.hypotheses_hold) {
    r.intersection_is_fragment = is_fragment(meet);
    r.union_is_fragment = is_fragment(join);
  }
  return r;
}

ClosureReport FragmentCalculus::check_translate_closure(const VertexSet& a, const VertexSet& translate) const {
  if (a.side != translate.side) throw std::invalid_argument("check_translate_closure: sets on different sides");
  ClosureReport r;
  r.a_is_fragment = !a.empty() && is_fragment(a);
  r.b_is_fragment = !translate.empty() && is_fragment(translate);
  const VertexSet meet{a.side, a.bits & translate.bits}, join{a.side, a.bits | translate.bits};
  r.intersection_nonempty = !meet.empty();
  r.union_nbhd_not_full = !g_.neighborhood(a.side, join.bits).all();
  const bool proper = r.intersection_nonempty && !(meet.bits == a.bits);
  if (r.a_is_fragment) r.size_condition = 2 * a.size() <= alpha_;  // |φ(A)| = α - |A|
  r.hypotheses_hold = r.a_is_fragment && r.b_is_fragment && proper && r.size_condition &&
                      a.size() == translate.size();
  if (r.hypotheses_hold) {
    r.intersection_is_fragment = is_fragment(meet);
    r.union_is_fragment = is_fragment(join);
  }
  return r;
}

long long epsilon(const BipartiteGraph& g, Side side) { return FragmentCalculus(g).epsilon(side); }

bool is_fragment(const BipartiteGraph& g, const VertexSet& s) { return FragmentCalculus(g).is_fragment(s); }

CayleyIdentityReport cayley_neighborhood_identity(const BipartiteGraph& g, const VertexSet& s) {
  if (g.family().family != Family::Permutations)
    throw std::invalid_argument("cayley_neighborhood_identity: not a permutation graph");
  if (s.side != Side::X) throw std::invalid_argument("cayley_neighborhood_identity: S must lie in X");
  const int n = g.family().params.at(0), t = g.family().params.at(1);
  const auto perms = permutations_lex(n);
  if (!s.bits.test(0)) throw std::invalid_argument("cayley_neighborhood_identity: S lacks the identity");
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], i);

  BitVec gen(perms.size());  // G_t: fewer than t fixed points
  for (std::size_t i = 0; i < perms.size(); ++i) {
    int fixed = 0;
    for (int k = 0; k < n; ++k) fixed += perms[i][static_cast<std::size_t>(k)] == k;
    if (fixed < t) gen.set(i);
  }
  auto product = [&](const BitVec& right) {
    BitVec out(perms.size());
    gen.for_each([&](std::size_t gi) {
      right.for_each([&](std::size_t si) {
        std::vector<int> c(static_cast<std::size_t>(n));
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = perms[gi][static_cast<std::size_t>(perms[si][k])];
        out.set(index.at(c));
      });
    });
    return out;
  };
  BitVec s_star = s.bits;
  s_star.reset(0);

  CayleyIdentityReport r;
  r.neighborhood_matches = product(s.bits) == g.neighborhood(Side::X, s.bits);
  if (!r.neighborhood_matches) throw std::logic_error("N(S) differs from G_t·S");
  r.product_outside = (product(s_star) - gen).count();
  r.s_star = s_star.count();
  return r;
}

}  // namespace crossint
