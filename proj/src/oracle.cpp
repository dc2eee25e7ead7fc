#include "crossint/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <thread>

#include "crossint/groupact.hpp"

namespace crossint {

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

// Visit the set bits of (a & b) in increasing order; stop when f returns true.
template <typename F>
bool for_each_common(const BitVec& a, const BitVec& b, F&& f) {
  for (std::size_t wi = 0; wi < a.num_words(); ++wi) {
    BitVec::Word w = a.word(wi) & b.word(wi);
    while (w) {
      if (f(wi * BitVec::kWordBits + static_cast<std::size_t>(std::countr_zero(w)))) return true;
      w &= w - 1;
    }
  }
  return false;
}

class HopcroftKarp {
 public:
  HopcroftKarp(const BipartiteGraph& g, const BitVec& ax, const BitVec& ay)
      : g_(g), ax_(ax), ay_(ay), mate_x_(g.x_size(), kUnmatched), mate_y_(g.y_size(), kUnmatched),
        dist_(g.x_size(), kInf) {}

  MatchingResult run() {
    std::size_t size = 0;
    while (bfs()) {
      ax_.for_each([&](std::size_t x) {
        if (mate_x_[x] == kUnmatched && dfs(x)) ++size;
      });
    }
    return {size, std::move(mate_x_), std::move(mate_y_)};
  }

 private:
  bool bfs() {
    std::vector<std::size_t> queue;
    std::fill(dist_.begin(), dist_.end(), kInf);
    ax_.for_each([&](std::size_t x) {
      if (mate_x_[x] == kUnmatched) {
        dist_[x] = 0;
        queue.push_back(x);
      }
    });
    free_dist_ = kInf;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t x = queue[head];
      if (dist_[x] >= free_dist_) break;
      for_each_common(g_.row(Side::X, x), ay_, [&](std::size_t y) {
        const std::size_t x2 = mate_y_[y];
        if (x2 == kUnmatched) {
          if (free_dist_ == kInf) free_dist_ = dist_[x] + 1;
        } else if (dist_[x2] == kInf) {
          dist_[x2] = dist_[x] + 1;
          queue.push_back(x2);
        }
        return false;
      });
    }
    return free_dist_ != kInf;
  }

  bool dfs(std::size_t x) {
    const bool found = for_each_common(g_.row(Side::X, x), ay_, [&](std::size_t y) {
      const std::size_t x2 = mate_y_[y];
      const bool ok = x2 == kUnmatched ? dist_[x] + 1 == free_dist_ : (dist_[x2] == dist_[x] + 1 && dfs(x2));
      if (ok) {
        mate_x_[x] = y;
        mate_y_[y] = x;
      }
      return ok;
    });
    if (!found) dist_[x] = kInf;
    return found;
  }

  const BipartiteGraph& g_;
  const BitVec& ax_;
  const BitVec& ay_;
  std::vector<std::size_t> mate_x_, mate_y_, dist_;
  std::size_t free_dist_ = kInf;
};

}  // namespace

MatchingResult max_matching(const BipartiteGraph& g, const BitVec& active_x, const BitVec& active_y) {
  return HopcroftKarp(g, active_x, active_y).run();
}

MatchingResult max_matching(const BipartiteGraph& g) {
  return max_matching(g, BitVec::full(g.x_size()), BitVec::full(g.y_size()));
}

IndependentSet max_independent_set(const BipartiteGraph& g, const BitVec& active_x, const BitVec& active_y) {
  const MatchingResult m = max_matching(g, active_x, active_y);
  // Alternating reachability from unmatched X vertices: Z. The cover is
  // (X \ Z) ∪ (Y ∩ Z); its complement (X ∩ Z) ∪ (Y \ Z) is independent.
  BitVec zx(g.x_size()), zy(g.y_size());
  std::vector<std::size_t> stack;
  active_x.for_each([&](std::size_t x) {
    if (m.mate_x[x] == kUnmatched) {
      zx.set(x);
      stack.push_back(x);
    }
  });
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for_each_common(g.row(Side::X, x), active_y, [&](std::size_t y) {
      if (!zy.test(y)) {
        zy.set(y);
        const std::size_t x2 = m.mate_y[y];
        if (x2 != kUnmatched && !zx.test(x2)) {
          zx.set(x2);
          stack.push_back(x2);
        }
      }
      return false;
    });
  }
  IndependentSet out;
  out.a = {Side::X, zx};
  out.b = {Side::Y, active_y - zy};
  out.size = out.a.size() + out.b.size();
  if (out.size + m.size != active_x.count() + active_y.count())
    throw std::logic_error("König identity violated: cover complement has the wrong size");
  if (g.neighborhood(Side::X, out.a.bits).intersects(out.b.bits))
    throw std::logic_error("König witness is not independent");
  return out;
}

IndependentSet max_independent_set(const BipartiteGraph& g) {
  return max_independent_set(g, BitVec::full(g.x_size()), BitVec::full(g.y_size()));
}

namespace {

bool better(const NontrivialMisResult& a, const NontrivialMisResult& b) {
  if (a.size != b.size) return a.size > b.size;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

void alpha_rows(const BipartiteGraph& g, std::size_t first, std::size_t stride, std::optional<NontrivialMisResult>& best) {
  for (std::size_t x = first; x < g.x_size(); x += stride) {
    const BitVec active_y = g.row(Side::X, x).complement();  // Y \ N(x)
    active_y.for_each([&](std::size_t y) {
      const BitVec active_x = g.row(Side::Y, y).complement();  // X \ N(y)
      IndependentSet mis = max_independent_set(g, active_x, active_y);
      // x and y are isolated in the residual graph, so the König witness
      // must already contain both.
      if (!mis.a.bits.test(x) || !mis.b.bits.test(y))
        throw std::logic_error("residual witness misses the forced pair");
      NontrivialMisResult r{mis.size, std::move(mis.a), std::move(mis.b), x, y};
      if (!best || better(r, *best)) best = std::move(r);
    });
  }
}

}  // namespace

NontrivialMisResult alpha_nontrivial(const BipartiteGraph& g, unsigned workers) {
  if (g.is_complete()) throw CompleteGraphError();
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, g.x_size()));

  std::vector<std::optional<NontrivialMisResult>> partial(workers);
  if (workers == 1) {
    alpha_rows(g, 0, 1, partial[0]);
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w)
      threads.emplace_back([&, w] {
        try {
          alpha_rows(g, w, workers, partial[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : threads) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::optional<NontrivialMisResult> best;
  for (auto& p : partial)
    if (p && (!best || better(*p, *best))) best = std::move(p);
  return std::move(*best);
}

namespace {

// Bron-Kerbosch with Tomita pivoting on the complement of G, whose maximal
// cliques are the maximal independent sets of G.
class MaximalIndependentSets {
 public:
  MaximalIndependentSets(const BipartiteGraph& g, std::size_t node_cap)
      : nx_(g.x_size()), n_(g.x_size() + g.y_size()), cap_(node_cap), comp_(n_, BitVec(n_)) {
    for (std::size_t x = 0; x < nx_; ++x) {
      for (std::size_t x2 = 0; x2 < nx_; ++x2)
        if (x2 != x) comp_[x].set(x2);
      g.row(Side::X, x).complement().for_each([&](std::size_t y) {
        comp_[x].set(nx_ + y);
        comp_[nx_ + y].set(x);
      });
    }
    for (std::size_t y = 0; y < g.y_size(); ++y)
      for (std::size_t y2 = 0; y2 < g.y_size(); ++y2)
        if (y2 != y) comp_[nx_ + y].set(nx_ + y2);
  }

  template <typename F>
  void run(F&& report) {
    BitVec r(n_);
    expand(r, BitVec::full(n_), BitVec(n_), report);
  }

 private:
  template <typename F>
  void expand(BitVec& r, BitVec p, BitVec x, F& report) {
    if (++nodes_ > cap_) throw CapExceeded("maximal independent set search exceeds " + std::to_string(cap_) + " nodes");
    if (p.none() && x.none()) {
      report(r);
      return;
    }
    std::size_t pivot = 0, best = 0;
    bool have = false;
    (p | x).for_each([&](std::size_t u) {
      std::size_t c = p.intersection_count(comp_[u]);
      if (!have || c > best) {
        pivot = u;
        best = c;
        have = true;
      }
    });
    const BitVec candidates = p - comp_[pivot];
    candidates.for_each([&](std::size_t v) {
      r.set(v);
      expand(r, p & comp_[v], x & comp_[v], report);
      r.reset(v);
      p.reset(v);
      x.set(v);
    });
  }

  std::size_t nx_, n_, cap_, nodes_ = 0;
  std::vector<BitVec> comp_;
};

}  // namespace

std::vector<NontrivialMisResult> enumerate_max_nontrivial(const BipartiteGraph& g, EnumerationLimits limits) {
  if (g.x_size() + g.y_size() > limits.max_vertices)
    throw BudgetExceeded("enumerate_max_nontrivial: " + std::to_string(g.x_size() + g.y_size()) +
                         " vertices exceed enumeration budget " + std::to_string(limits.max_vertices));
  if (g.is_complete()) throw CompleteGraphError();
  const std::size_t nx = g.x_size(), ny = g.y_size();
  std::vector<NontrivialMisResult> found;
  std::size_t best = 0;
  MaximalIndependentSets(g, limits.max_search_nodes).run([&](const BitVec& r) {
    NontrivialMisResult m{0, {Side::X, BitVec(nx)}, {Side::Y, BitVec(ny)}, 0, 0};
    r.for_each([&](std::size_t v) {
      if (v < nx) m.witness_a.bits.set(v);
      else m.witness_b.bits.set(v - nx);
    });
    if (m.witness_a.empty() || m.witness_b.empty()) return;
    m.size = r.count();
    if (m.size < best) return;
    if (m.size > best) {
      best = m.size;
      found.clear();
    }
    m.x = m.witness_a.bits.first();
    m.y = m.witness_b.bits.first();
    found.push_back(std::move(m));
  });
  std::sort(found.begin(), found.end(), [](const NontrivialMisResult& a, const NontrivialMisResult& b) {
    if (!(a.witness_a.bits == b.witness_a.bits)) return a.witness_a.bits < b.witness_a.bits;
    return a.witness_b.bits < b.witness_b.bits;
  });
  return found;
}

long long epsilon_bruteforce(const BipartiteGraph& g, Side side, std::size_t max_part) {
  const std::size_t n = g.size(side);
  if (n > max_part)
    throw BudgetExceeded("epsilon_bruteforce: part of size " + std::to_string(n) + " exceeds " +
                         std::to_string(max_part));
  const std::size_t m = g.size(opposite(side));
  const auto& rows = g.rows(side);
  std::optional<long long> best;
  // Depth-first over subsets in increasing index order; N only grows, so a
  // full neighborhood ends the branch.
  std::vector<BitVec> nbhd(n + 1, BitVec(m));
  auto visit = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
    for (std::size_t v = start; v < n; ++v) {
      nbhd[depth + 1] = nbhd[depth];
      nbhd[depth + 1] |= rows[v];
      const std::size_t cnt = nbhd[depth + 1].count();
      if (cnt == m) continue;
      const long long val = static_cast<long long>(cnt) - static_cast<long long>(depth + 1);
      if (!best || val < *best) best = val;
      self(self, depth + 1, v + 1);
    }
  };
  visit(visit, 0, 0);
  if (!best) throw std::domain_error("epsilon_bruteforce: no nonempty subset has a non-full neighborhood");
  return *best;
}

}  // namespace crossint
