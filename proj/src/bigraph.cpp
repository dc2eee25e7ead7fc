#include "crossint/bigraph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

#include "crossint/exactmath.hpp"
#include "crossint/fqlinalg.hpp"

namespace crossint {

const char* family_name(Family f) {
  switch (f) {
    case Family::Sets: return "sets";
    case Family::Subspaces: return "subspaces";
    case Family::Permutations: return "permutations";
    case Family::Circulant: return "circulant";
    case Family::Custom: break;
  }
  return "custom";
}

Family parse_family(std::string_view name) {
  if (name == "sets") return Family::Sets;
  if (name == "subspaces") return Family::Subspaces;
  if (name == "permutations" || name == "perms") return Family::Permutations;
  if (name == "circulant") return Family::Circulant;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string FamilyInfo::name() const {
  std::string s = family_name(family);
  if (family == Family::Custom) return s;
  s += '(';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(params[i]);
  }
  return s + ')';
}

BipartiteGraph::BipartiteGraph(std::vector<std::string> x_labels, std::vector<std::string> y_labels,
                               std::vector<BitVec> adj_x, FamilyInfo family)
    : x_labels_(std::move(x_labels)), y_labels_(std::move(y_labels)), adj_x_(std::move(adj_x)),
      family_(std::move(family)) {
  if (x_labels_.empty() || y_labels_.empty()) throw std::invalid_argument("bipartite graph parts must be nonempty");
  if (adj_x_.size() != x_labels_.size()) throw std::invalid_argument("one adjacency row per X vertex required");
  for (const auto& r : adj_x_)
    if (r.size() != y_labels_.size()) throw std::invalid_argument("adjacency row length must equal |Y|");
  for (const auto* labels : {&x_labels_, &y_labels_}) {
    std::set<std::string_view> seen(labels->begin(), labels->end());
    if (seen.size() != labels->size()) throw std::invalid_argument("duplicate vertex label");
  }
  adj_y_.assign(y_labels_.size(), BitVec(x_labels_.size()));
  for (std::size_t x = 0; x < adj_x_.size(); ++x) adj_x_[x].for_each([&](std::size_t y) { adj_y_[y].set(x); });
}

BipartiteGraph BipartiteGraph::from_rows(std::size_t nx, std::size_t ny, std::vector<BitVec> adj_x) {
  std::vector<std::string> xl, yl;
  for (std::size_t i = 1; i <= nx; ++i) xl.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= ny; ++i) yl.push_back("y" + std::to_string(i));
  return BipartiteGraph(std::move(xl), std::move(yl), std::move(adj_x));
}

std::size_t BipartiteGraph::edge_count() const {
  std::size_t e = 0;
  for (const auto& r : adj_x_) e += r.count();
  return e;
}

VertexSet BipartiteGraph::singleton(Side s, std::size_t v) const {
  VertexSet out = empty_set(s);
  out.bits.set(v);
  return out;
}

BitVec BipartiteGraph::neighborhood(Side s, const BitVec& members) const {
  BitVec out(size(opposite(s)));
  const auto& adj = rows(s);
  members.for_each([&](std::size_t v) { out |= adj[v]; });
  return out;
}

VertexSet BipartiteGraph::neighborhood(const VertexSet& s) const {
  return {opposite(s.side), neighborhood(s.side, s.bits)};
}

bool BipartiteGraph::is_complete() const {
  return std::all_of(adj_x_.begin(), adj_x_.end(), [](const BitVec& r) { return r.all(); });
}

bool BipartiteGraph::is_connected() const {
  BitVec seen_x(x_size()), seen_y(y_size());
  seen_x.set(0);
  BitVec frontier_x = seen_x, frontier_y(y_size());
  while (frontier_x.any() || frontier_y.any()) {
    BitVec next_y = neighborhood(Side::X, frontier_x) - seen_y;
    BitVec next_x = neighborhood(Side::Y, frontier_y) - seen_x;
    seen_x |= next_x;
    seen_y |= next_y;
    frontier_x = std::move(next_x);
    frontier_y = std::move(next_y);
  }
  return seen_x.all() && seen_y.all();
}

BipartiteGraph::Biregularity BipartiteGraph::biregularity() const {
  Biregularity b;
  b.dx = adj_x_.front().count();
  b.dy = adj_y_.front().count();
  b.regular = std::all_of(adj_x_.begin(), adj_x_.end(), [&](const BitVec& r) { return r.count() == b.dx; }) &&
              std::all_of(adj_y_.begin(), adj_y_.end(), [&](const BitVec& r) { return r.count() == b.dy; });
  return b;
}

BipartiteGraph BipartiteGraph::transposed() const { return BipartiteGraph(y_labels_, x_labels_, adj_y_); }

std::string BipartiteGraph::set_label(const VertexSet& s) const {
  std::string out = "{";
  bool first = true;
  const auto& l = labels(s.side);
  s.bits.for_each([&](std::size_t v) {
    if (!first) out += ", ";
    out += l[v];
    first = false;
  });
  return out + "}";
}

namespace {

void check_part_budget(const BigNat& count, const BuildBudget& budget, const char* what) {
  if (count > BigNat(budget.vertices_per_part))
    throw BudgetExceeded(std::string(what) + ": part of size " + count.str() + " exceeds vertex budget " +
                         std::to_string(budget.vertices_per_part));
}

}  // namespace

std::vector<std::uint64_t> subsets_lex(int n, int k) {
  if (n < 0 || n > 63) throw std::invalid_argument("subsets_lex: n must be in [0, 63]");
  std::vector<std::uint64_t> out;
  if (k < 0 || k > n) return out;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint64_t w = 0;
    for (int e : c) w |= std::uint64_t{1} << e;
    out.push_back(w);
    int i = k;
    while (i > 0 && c[static_cast<std::size_t>(i - 1)] == n - k + i - 1) --i;
    if (i == 0) break;
    ++c[static_cast<std::size_t>(i - 1)];
    for (int j = i; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::string subset_label(std::uint64_t word) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 64; ++i) {
    if (!((word >> i) & 1u)) continue;
    if (!first) s += ' ';
    s += std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

std::vector<std::vector<int>> permutations_lex(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string permutation_label(const std::vector<int>& perm) {
  std::string s = "[";
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(perm[i] + 1);
  }
  return s + "]";
}

std::vector<int> parse_permutation_label(std::string_view label) {
  if (label.size() < 2 || label.front() != '[' || label.back() != ']')
    throw std::invalid_argument("not a permutation label: " + std::string(label));
  std::istringstream is(std::string(label.substr(1, label.size() - 2)));
  std::vector<int> p;
  int v;
  while (is >> v) p.push_back(v - 1);
  std::vector<int> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) throw std::invalid_argument("not a permutation: " + std::string(label));
  return p;
}

BipartiteGraph build_set_graph(int n, int a, int b, int t, BuildBudget budget) {
  if (n < 1 || n > 63) throw std::invalid_argument("build_set_graph: n must be in [1, 63]");
  if (a < 1 || b < 1 || a > n || b > n) throw std::invalid_argument("build_set_graph: need 1 <= a,b <= n");
  if (t < 1) throw std::invalid_argument("build_set_graph: t >= 1 violated");
  check_part_budget(binomial(n, a), budget, "build_set_graph");
  check_part_budget(binomial(n, b), budget, "build_set_graph");

  const auto xs = subsets_lex(n, a), ys = subsets_lex(n, b);
  std::vector<BitVec> adj(xs.size(), BitVec(ys.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j)
      if (std::popcount(xs[i] & ys[j]) < t) adj[i].set(j);
  std::vector<std::string> xl, yl;
  for (auto w : xs) xl.push_back(subset_label(w));
  for (auto w : ys) yl.push_back(subset_label(w));
  return BipartiteGraph(std::move(xl), std::move(yl), std::move(adj), {Family::Sets, {n, a, b, t}});
}

BipartiteGraph build_subspace_graph(int n, int q, int a, int b, int t, BuildBudget budget) {
  if (q < 2 || !is_prime(static_cast<std::uint32_t>(q)))
    throw std::invalid_argument("build_subspace_graph: q=" + std::to_string(q) + " is not prime");
  if (n < 1 || a < 1 || b < 1 || a > n || b > n) throw std::invalid_argument("build_subspace_graph: need 1 <= a,b <= n");
  if (t < 1) throw std::invalid_argument("build_subspace_graph: t >= 1 violated");
  check_part_budget(gaussian_binomial(n, a, q), budget, "build_subspace_graph");
  check_part_budget(gaussian_binomial(n, b, q), budget, "build_subspace_graph");

  const auto un = static_cast<std::size_t>(n);
  const auto uq = static_cast<std::uint32_t>(q);
  const auto xs = enumerate_subspaces(un, uq, static_cast<std::size_t>(a), budget.vertices_per_part);
  const auto ys = enumerate_subspaces(un, uq, static_cast<std::size_t>(b), budget.vertices_per_part);
  std::vector<BitVec> adj(xs.size(), BitVec(ys.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j)
      if (intersection_dim(xs[i], ys[j]) < t) adj[i].set(j);
  std::vector<std::string> xl, yl;
  for (const auto& s : xs) xl.push_back(s.label());
  for (const auto& s : ys) yl.push_back(s.label());
  return BipartiteGraph(std::move(xl), std::move(yl), std::move(adj), {Family::Subspaces, {n, q, a, b, t}});
}

BipartiteGraph build_permutation_graph(int n, int t, BuildBudget budget) {
  if (n < 3) throw std::invalid_argument("build_permutation_graph: n >= 3 violated");
  if (t < 1 || t > n - 2) throw std::invalid_argument("build_permutation_graph: 1 <= t <= n-2 violated");
  check_part_budget(factorial(n), budget, "build_permutation_graph");

  const auto perms = permutations_lex(n);
  std::vector<BitVec> adj(perms.size(), BitVec(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j) {
      int agree = 0;
      for (int k = 0; k < n; ++k) agree += perms[i][static_cast<std::size_t>(k)] == perms[j][static_cast<std::size_t>(k)];
      if (agree < t) adj[i].set(j);
    }
  std::vector<std::string> labels;
  for (const auto& p : perms) labels.push_back(permutation_label(p));
  return BipartiteGraph(labels, labels, std::move(adj), {Family::Permutations, {n, t}});
}

BipartiteGraph build_circulant_graph(int n, int r) {
  if (r < 1 || r >= n) throw std::invalid_argument("build_circulant_graph: 1 <= r < n violated");
  const auto un = static_cast<std::size_t>(n);
  std::vector<BitVec> adj(un, BitVec(un));
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t k = 0; k < static_cast<std::size_t>(r); ++k) adj[i].set((i + k) % un);
  std::vector<std::string> xl, yl;
  for (int i = 1; i <= n; ++i) {
    xl.push_back("x" + std::to_string(i));
    yl.push_back("y" + std::to_string(i));
  }
  return BipartiteGraph(std::move(xl), std::move(yl), std::move(adj), {Family::Circulant, {n, r}});
}

BipartiteGraph build_family_graph(Family family, const std::vector<int>& p, BuildBudget budget) {
  auto need = [&](std::size_t arity, const char* usage) {
    if (p.size() != arity) throw std::invalid_argument(std::string("expected parameters ") + usage);
  };
  switch (family) {
    case Family::Sets: need(4, "n a b t"); return build_set_graph(p[0], p[1], p[2], p[3], budget);
    case Family::Subspaces: need(5, "n q a b t"); return build_subspace_graph(p[0], p[1], p[2], p[3], p[4], budget);
    case Family::Permutations: need(2, "n t"); return build_permutation_graph(p[0], p[1], budget);
    case Family::Circulant:
      need(2, "n r");
      if (static_cast<std::uint64_t>(std::max(p[0], 0)) > budget.vertices_per_part)
        throw BudgetExceeded("build_circulant_graph: part exceeds vertex budget");
      return build_circulant_graph(p[0], p[1]);
    case Family::Custom: break;
  }
  throw std::invalid_argument("no builder for custom graphs");
}

std::string serialize(const BipartiteGraph& g) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out = std::to_string(g.x_size()) + " " + std::to_string(g.y_size()) + "\n";
  const std::size_t digits = (g.y_size() + 3) / 4;
  for (std::size_t x = 0; x < g.x_size(); ++x) {
    const BitVec& r = g.row(Side::X, x);
    std::string line(digits, '0');
    for (std::size_t d = 0; d < digits; ++d) {
      unsigned nib = 0;
      for (std::size_t k = 0; k < 4; ++k) {
        std::size_t bit = 4 * d + k;
        if (bit < r.size() && r.test(bit)) nib |= 1u << k;
      }
      line[digits - 1 - d] = kHex[nib];
    }
    out += line + "\n";
  }
  for (Side s : {Side::X, Side::Y}) {
    const auto& l = g.labels(s);
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (i) out += ',';
      out += l[i];
    }
    out += "\n";
  }
  return out;
}

BipartiteGraph deserialize(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  if (lines.empty()) throw ParseError(1, "empty input");

  auto parse_size = [](std::string_view s, std::size_t& out) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size() && out > 0;
  };
  auto sp = lines[0].find(' ');
  std::size_t nx = 0, ny = 0;
  if (sp == std::string_view::npos || !parse_size(lines[0].substr(0, sp), nx) ||
      !parse_size(lines[0].substr(sp + 1), ny))
    throw ParseError(1, "expected header '<|X|> <|Y|>' with positive sizes");
  if (lines.size() < nx + 3) throw ParseError(lines.size() + 1, "unexpected end of input");

  const std::size_t digits = (ny + 3) / 4;
  std::vector<BitVec> adj;
  adj.reserve(nx);
  for (std::size_t x = 0; x < nx; ++x) {
    const std::size_t lineno = x + 2;
    auto line = lines[x + 1];
    if (line.size() != digits)
      throw ParseError(lineno, "expected " + std::to_string(digits) + " hex digits, got " + std::to_string(line.size()));
    BitVec r(ny);
    for (std::size_t d = 0; d < digits; ++d) {
      char c = line[digits - 1 - d];
      unsigned nib;
      if (c >= '0' && c <= '9') nib = static_cast<unsigned>(c - '0');
      else if (c >= 'A' && c <= 'F') nib = static_cast<unsigned>(c - 'A' + 10);
      else if (c >= 'a' && c <= 'f') nib = static_cast<unsigned>(c - 'a' + 10);
      else throw ParseError(lineno, std::string("invalid hex digit '") + c + "'");
      for (std::size_t k = 0; k < 4; ++k) {
        if (!((nib >> k) & 1u)) continue;
        std::size_t bit = 4 * d + k;
        if (bit >= ny) throw ParseError(lineno, "bit set beyond |Y|");
        r.set(bit);
      }
    }
    adj.push_back(std::move(r));
  }

  auto split_labels = [](std::string_view line) {
    std::vector<std::string> out;
    while (true) {
      auto c = line.find(',');
      out.emplace_back(line.substr(0, c));
      if (c == std::string_view::npos) break;
      line.remove_prefix(c + 1);
    }
    return out;
  };
  auto xl = split_labels(lines[nx + 1]);
  auto yl = split_labels(lines[nx + 2]);
  if (xl.size() != nx) throw ParseError(nx + 2, "expected " + std::to_string(nx) + " X labels");
  if (yl.size() != ny) throw ParseError(nx + 3, "expected " + std::to_string(ny) + " Y labels");
  for (std::size_t i = nx + 3; i < lines.size(); ++i)
    if (!lines[i].empty()) throw ParseError(i + 1, "trailing content");
  try {
    return BipartiteGraph(std::move(xl), std::move(yl), std::move(adj));
  } catch (const std::invalid_argument& e) {
    throw ParseError(nx + 2, e.what());
  }
}

}  // namespace crossint
