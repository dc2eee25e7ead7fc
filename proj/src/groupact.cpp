#include "crossint/groupact.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "crossint/fqlinalg.hpp"

namespace crossint {

PartPermutation::PartPermutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || hit[v]) throw std::invalid_argument("part permutation is not a bijection");
    hit[v] = true;
  }
}

PartPermutation PartPermutation::identity(std::size_t n) {
  std::vector<std::uint32_t> id(n);
  std::iota(id.begin(), id.end(), 0u);
  return PartPermutation(std::move(id));
}

BitVec PartPermutation::apply(const BitVec& s) const {
  BitVec out(s.size());
  s.for_each([&](std::size_t v) { out.set(images_[v]); });
  return out;
}

bool PartPermutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

GroupAction::GroupAction(const BipartiteGraph& g, std::vector<GeneratorPair> generators)
    : nx_(g.x_size()), ny_(g.y_size()), gens_(std::move(generators)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const auto& [gx, gy] = gens_[i];
    if (gx.size() != nx_ || gy.size() != ny_)
      throw std::invalid_argument("generator " + std::to_string(i) + " does not match the part sizes");
    // gx, gy are bijections, so mapping every edge to an edge and keeping
    // row sizes equal makes adjacency preserved in both directions.
    for (std::size_t x = 0; x < nx_; ++x) {
      const BitVec& target = g.row(Side::X, gx(x));
      const BitVec& source = g.row(Side::X, x);
      bool ok = source.count() == target.count();
      source.for_each([&](std::size_t y) { ok = ok && target.test(gy(y)); });
      if (!ok)
        throw std::invalid_argument("generator " + std::to_string(i) + " does not preserve adjacency at " +
                                    g.labels(Side::X)[x]);
    }
  }
}

namespace {

std::vector<std::uint32_t> index_images(std::size_t n, const auto& image_of) {
  std::vector<std::uint32_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(image_of(i));
  return out;
}

std::uint64_t permute_word(std::uint64_t w, const std::vector<int>& p) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if ((w >> i) & 1u) out |= std::uint64_t{1} << p[i];
  return out;
}

PartPermutation subset_generator(int n, int k, const std::vector<int>& p) {
  const auto words = subsets_lex(n, k);
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
  return PartPermutation(index_images(words.size(), [&](std::size_t i) { return index.at(permute_word(words[i], p)); }));
}

// Transposition (1 2) and cycle (1 2 ... n) as 0-based one-line images.
std::vector<std::vector<int>> symmetric_generators(int n) {
  std::vector<int> swap(static_cast<std::size_t>(n)), cycle(static_cast<std::size_t>(n));
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
  return {swap, cycle};
}

void require_family(const BipartiteGraph& g, Family f) {
  if (g.family().family != f)
    throw std::invalid_argument(std::string("expected a ") + family_name(f) + " graph, got " + g.family().name());
}

}  // namespace

GroupAction permutation_multiplication_action(const BipartiteGraph& g, bool left, bool right) {
  require_family(g, Family::Permutations);
  const int n = g.family().params.at(0);
  const auto perms = permutations_lex(n);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], i);

  std::vector<GeneratorPair> gens;
  for (const auto& s : symmetric_generators(n)) {
    auto make = [&](bool on_left) {
      return PartPermutation(index_images(perms.size(), [&](std::size_t i) {
        std::vector<int> img(perms[i].size());
        for (std::size_t x = 0; x < img.size(); ++x)
          img[x] = on_left ? s[static_cast<std::size_t>(perms[i][x])] : perms[i][static_cast<std::size_t>(s[x])];
        return index.at(img);
      }));
    };
    if (left) {
      auto p = make(true);
      gens.push_back({p, p});
    }
    if (right) {
      auto p = make(false);
      gens.push_back({p, p});
    }
  }
  return GroupAction(g, std::move(gens));
}

GroupAction induced_symmetric_action(const BipartiteGraph& g) {
  const auto& p = g.family().params;
  switch (g.family().family) {
    case Family::Sets: {
      std::vector<GeneratorPair> gens;
      for (const auto& s : symmetric_generators(p[0]))
        gens.push_back({subset_generator(p[0], p[1], s), subset_generator(p[0], p[2], s)});
      return GroupAction(g, std::move(gens));
    }
    case Family::Permutations: return permutation_multiplication_action(g, true, true);
    case Family::Circulant: {
      const auto n = static_cast<std::size_t>(p[0]);
      PartPermutation rot(index_images(n, [&](std::size_t i) { return (i + 1) % n; }));
      return GroupAction(g, {{rot, rot}});
    }
    default: break;
  }
  throw std::invalid_argument("no induced symmetric action for " + g.family().name());
}

GroupAction induced_gl_action(const BipartiteGraph& g) {
  require_family(g, Family::Subspaces);
  const auto& p = g.family().params;
  const auto n = static_cast<std::size_t>(p[0]);
  const auto q = static_cast<std::uint32_t>(p[1]);
  const PrimeField field(q);

  std::vector<FqMatrix> mats;
  auto identity = [&] {
    FqMatrix m(n, std::vector<PrimeField::Elem>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  };
  if (n >= 2) {
    FqMatrix transvection = identity();
    transvection[0][1] = 1;
    mats.push_back(transvection);
    FqMatrix cycle(n, std::vector<PrimeField::Elem>(n, 0));
    for (std::size_t k = 0; k < n; ++k) cycle[k][(k + 1) % n] = 1;
    mats.push_back(cycle);
  }
  if (q > 2) {
    FqMatrix diag = identity();
    diag[0][0] = field.primitive_root();
    mats.push_back(diag);
  }

  auto part_generator = [&](int k, const FqMatrix& m) {
    const auto subs = enumerate_subspaces(n, q, static_cast<std::size_t>(k), g.size(Side::X) + g.size(Side::Y));
    std::map<FqMatrix, std::size_t> index;
    for (std::size_t i = 0; i < subs.size(); ++i) index.emplace(subs[i].rows(), i);
    return PartPermutation(
        index_images(subs.size(), [&](std::size_t i) { return index.at(subs[i].transformed(m).rows()); }));
  };
  std::vector<GeneratorPair> gens;
  for (const auto& m : mats) gens.push_back({part_generator(p[2], m), part_generator(p[3], m)});
  return GroupAction(g, std::move(gens));
}

GroupAction induced_action(const BipartiteGraph& g) {
  if (g.family().family == Family::Subspaces) return induced_gl_action(g);
  return induced_symmetric_action(g);
}

VertexSet orbit(const GroupAction& action, Side side, std::size_t v) {
  VertexSet out{side, BitVec(action.part_size(side))};
  out.bits.set(v);
  std::vector<std::size_t> stack{v};
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < action.generators().size(); ++i) {
      auto w = action.generator(i, side)(u);
      if (!out.bits.test(w)) {
        out.bits.set(w);
        stack.push_back(w);
      }
    }
  }
  return out;
}

bool is_part_transitive(const BipartiteGraph& g, const GroupAction& action) {
  if (action.part_size(Side::X) != g.x_size() || action.part_size(Side::Y) != g.y_size()) return false;
  return orbit(action, Side::X, 0).bits.all() && orbit(action, Side::Y, 0).bits.all();
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

Partition minimal_block_system(const GroupAction& action, Side side, std::size_t u, std::size_t v) {
  const std::size_t n = action.part_size(side);
  UnionFind uf(n);
  // Each merge of two classes enqueues a representative pair; applying every
  // generator to every queued pair yields the finest invariant partition.
  std::deque<std::pair<std::size_t, std::size_t>> queue;
  if (uf.unite(u, v)) queue.emplace_back(u, v);
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < action.generators().size(); ++i) {
      const auto& gen = action.generator(i, side);
      auto ga = gen(a), gb = gen(b);
      if (uf.unite(ga, gb)) queue.emplace_back(ga, gb);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t w = 0; w < n; ++w) blocks[uf.find(w)].push_back(w);
  Partition out;
  for (auto& [root, members] : blocks) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_primitive(const GroupAction& action, Side side) {
  const std::size_t n = action.part_size(side);
  for (std::size_t v = 1; v < n; ++v)
    if (minimal_block_system(action, side, 0, v).size() != 1) return false;
  return true;
}

std::vector<VertexSet> set_orbit(const GroupAction& action, const VertexSet& b, std::size_t cap) {
  std::unordered_set<BitVec, BitVecHash> seen{b.bits};
  std::vector<BitVec> stack{b.bits};
  while (!stack.empty()) {
    BitVec cur = std::move(stack.back());
    stack.pop_back();
    for (std::size_t i = 0; i < action.generators().size(); ++i) {
      BitVec img = action.generator(i, b.side).apply(cur);
      if (seen.insert(img).second) {
        if (seen.size() > cap) throw CapExceeded("set orbit exceeds cap " + std::to_string(cap));
        stack.push_back(std::move(img));
      }
    }
  }
  std::vector<BitVec> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<VertexSet> out;
  out.reserve(sorted.size());
  for (auto& s : sorted) out.push_back({b.side, std::move(s)});
  return out;
}

bool is_semi_imprimitive(const GroupAction& action, const VertexSet& b, std::size_t cap) {
  const std::size_t k = b.size();
  if (k <= 1 || k >= action.part_size(b.side))
    throw std::invalid_argument("semi-imprimitivity needs 1 < |B| < part size");
  for (const auto& c : set_orbit(action, b, cap)) {
    const std::size_t m = c.bits.intersection_count(b.bits);
    if (m > 1 && m != k) return false;
  }
  return true;
}

bool is_imprimitive_set(const GroupAction& action, const VertexSet& b, std::size_t cap) {
  const std::size_t k = b.size();
  if (k <= 1 || k >= action.part_size(b.side)) return false;
  for (const auto& c : set_orbit(action, b, cap)) {
    const std::size_t m = c.bits.intersection_count(b.bits);
    if (m != 0 && m != k) return false;
  }
  return true;
}

}  // namespace crossint
