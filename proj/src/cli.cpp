#include "crossint/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "crossint/exactmath.hpp"
#include "crossint/fragments.hpp"
#include "crossint/groupact.hpp"
#include "crossint/oracle.hpp"
#include "crossint/verify.hpp"

namespace crossint {

using ojson = nlohmann::ordered_json;

std::size_t family_arity(Family f) {
  switch (f) {
    case Family::Sets: return 4;
    case Family::Subspaces: return 5;
    case Family::Permutations: return 2;
    case Family::Circulant: return 2;
    case Family::Custom: break;
  }
  return 0;
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

std::optional<long long> parse_int(std::string_view s) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

std::vector<GridTuple> parse_grid(std::string_view text) {
  std::vector<GridTuple> out;
  BuildBudget budget;
  std::size_t subsets = GridTuple{}.subset_budget;
  std::size_t lineno = 0;
  std::istringstream is{std::string(text)};
  for (std::string line; std::getline(is, line);) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto tok = split_ws(line);
    if (tok.empty()) continue;

    if (tok[0] == "budget") {
      if (tok.size() != 3) throw ParseError(lineno, "expected 'budget vertices|subsets N'");
      const auto v = parse_int(tok[2]);
      if (!v || *v < 1) throw ParseError(lineno, "bad budget value '" + tok[2] + "'");
      if (tok[1] == "vertices") budget.vertices_per_part = static_cast<std::uint64_t>(*v);
      else if (tok[1] == "subsets") subsets = static_cast<std::size_t>(*v);
      else throw ParseError(lineno, "unknown budget '" + tok[1] + "'");
      continue;
    }

    Family fam;
    try {
      fam = parse_family(tok[0]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
    const std::size_t arity = family_arity(fam);
    if (tok.size() - 1 != arity)
      throw ParseError(lineno, tok[0] + " takes " + std::to_string(arity) + " parameters, got " +
                                   std::to_string(tok.size() - 1));
    std::vector<std::pair<int, int>> ranges;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      const std::string& t = tok[i];
      const auto dots = t.find("..");
      std::optional<long long> lo, hi;
      if (dots == std::string::npos) {
        lo = hi = parse_int(t);
      } else {
        lo = parse_int(std::string_view(t).substr(0, dots));
        hi = parse_int(std::string_view(t).substr(dots + 2));
      }
      if (!lo || !hi) throw ParseError(lineno, "bad parameter '" + t + "'");
      if (*lo > *hi) throw ParseError(lineno, "empty range '" + t + "'");
      if (*lo < -1'000'000 || *hi > 1'000'000) throw ParseError(lineno, "parameter out of range '" + t + "'");
      ranges.emplace_back(static_cast<int>(*lo), static_cast<int>(*hi));
    }
    std::vector<int> cur(arity);
    auto expand = [&](auto&& self, std::size_t i) -> void {
      if (i == arity) {
        out.push_back({fam, cur, budget, subsets, lineno});
        return;
      }
      for (int v = ranges[i].first; v <= ranges[i].second; ++v) {
        cur[i] = v;
        self(self, i + 1);
      }
    };
    expand(expand, 0);
  }
  return out;
}

namespace {

enum class Format { Text, Csv, Json };

struct Globals {
  std::string format = "text";
  std::uint64_t budget_vertices = BuildBudget{}.vertices_per_part;
  std::size_t budget_subsets = GridTuple{}.subset_budget;
  std::string dump_graph;
  unsigned workers = 1;

  Format fmt() const { return format == "csv" ? Format::Csv : format == "json" ? Format::Json : Format::Text; }
  BuildBudget budget() const { return {budget_vertices}; }
};

// A usage / budget / hypothesis problem: message to stderr, exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t part_limit(std::size_t subsets) {
  std::size_t k = 0;
  while (k < 63 && (std::size_t{1} << (k + 1)) <= subsets) ++k;
  return k;
}

std::string join_params(const std::vector<int>& p, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(p[i]);
  }
  return s;
}

ojson big_json(const BigNat& v) {
  try {
    return v.to_u64();
  } catch (const std::overflow_error&) {
    return v.str();
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) {
    if (c == '"') o += '"';
    o += c;
  }
  return o + "\"";
}

void print_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows, Format fmt) {
  if (fmt == Format::Csv) {
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i]);
      out << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return;
  }
  std::vector<std::size_t> w(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
      s += r[i];
      if (i + 1 < r.size()) s += std::string(w[i] - r[i].size() + 2, ' ');
    }
    out << s << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

std::vector<int> int_params(const std::vector<std::string>& raw) {
  std::vector<int> p;
  for (const auto& s : raw) {
    auto v = parse_int(s);
    if (!v || *v < -1'000'000 || *v > 1'000'000) throw UsageError("bad parameter '" + s + "'");
    p.push_back(static_cast<int>(*v));
  }
  return p;
}

BipartiteGraph build_or_usage(const std::string& family, const std::vector<int>& p, const Globals& gl) {
  Family f;
  try {
    f = parse_family(family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  try {
    auto g = build_family_graph(f, p, gl.budget());
    if (!gl.dump_graph.empty()) {
      std::ofstream os(gl.dump_graph);
      if (!os) throw UsageError("cannot write " + gl.dump_graph);
      os << serialize(g);
    }
    return g;
  } catch (const BudgetExceeded& e) {
    throw UsageError(std::string("budget exceeded: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// ---- bounds

int cmd_bounds(const std::string& family, const std::vector<int>& p, const Globals& gl, std::ostream& out) {
  auto need = [&](std::size_t n, const char* usage) {
    if (p.size() != n) throw UsageError(family + " expects parameters " + usage);
  };
  std::string nx = "-", ny = "-", degree = "-";
  BigNat bound;
  ojson rec;
  try {
    if (family == "sets") {
      need(4, "n a b t");
      bound = cross_bound_sets(p[0], p[1], p[2], p[3]);
      nx = binomial(p[0], p[1]).str();
      ny = binomial(p[0], p[2]).str();
      degree = set_degree(p[0], p[1], p[2], p[3]).str();
    } else if (family == "subspaces") {
      need(5, "n q a b t");
      bound = cross_bound_subspaces(p[0], p[1], p[2], p[3], p[4]);
      nx = gaussian_binomial(p[0], p[2], p[1]).str();
      ny = gaussian_binomial(p[0], p[3], p[1]).str();
      degree = subspace_degree(p[0], p[1], p[2], p[3], p[4]).str();
    } else if (family == "perms" || family == "permutations") {
      need(2, "n t");
      bound = cross_bound_permutations(p[0], p[1]);
      nx = ny = factorial(p[0]).str();
      degree = permutation_degree(p[0], p[1]).str();
    } else if (family == "hilton") {
      need(3, "n k m");
      bound = hilton_bound(p[0], p[1], p[2]);
    } else if (family == "hm-ft") {
      need(3, "n a b");
      bound = hm_ft_bound(p[0], p[1], p[2]);
      nx = binomial(p[0], p[1]).str();
      ny = binomial(p[0], p[2]).str();
      degree = binomial(p[0] - p[1], p[2]).str();
    } else {
      throw UsageError("unknown bound family '" + family + "'");
    }
  } catch (const HypothesisError& e) {
    throw UsageError(std::string("hypothesis violated: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  if (gl.fmt() == Format::Json) {
    rec["family"] = family;
    rec["params"] = p;
    rec["x_size"] = nx == "-" ? ojson(nullptr) : big_json(BigNat::from_string(nx));
    rec["y_size"] = ny == "-" ? ojson(nullptr) : big_json(BigNat::from_string(ny));
    rec["degree"] = degree == "-" ? ojson(nullptr) : big_json(BigNat::from_string(degree));
    rec["bound"] = big_json(bound);
    out << rec.dump() << "\n";
  } else {
    print_table(out, {"family", "params", "|X|", "|Y|", "degree", "bound"},
                {{family, join_params(p, " "), nx, ny, degree, bound.str()}}, gl.fmt());
  }
  return 0;
}

// ---- alpha

struct AlphaOutcome {
  std::size_t alpha = 0;
  std::optional<std::size_t> formula;
  std::string witness;
  bool match() const { return formula && *formula == alpha; }
};

AlphaOutcome compute_alpha(const BipartiteGraph& g, unsigned workers) {
  if (g.is_complete()) throw UsageError("graph is complete: no nontrivial independent set");
  const auto mis = alpha_nontrivial(g, workers);
  AlphaOutcome o;
  o.alpha = mis.size;
  const auto br = g.biregularity();
  if (br.regular) {
    const bool x_small = g.x_size() <= g.y_size();
    o.formula = (x_small ? g.y_size() : g.x_size()) - (x_small ? br.dx : br.dy) + 1;
  }
  o.witness = "A=" + g.set_label(mis.witness_a) + " B=" + g.set_label(mis.witness_b);
  return o;
}

int cmd_alpha(const std::string& family, const std::vector<int>& p, const Globals& gl, std::ostream& out) {
  const auto g = build_or_usage(family, p, gl);
  const auto o = compute_alpha(g, gl.workers);
  const std::string formula = o.formula ? std::to_string(*o.formula) : "-";
  const std::string verdict = o.formula ? (o.match() ? "MATCH" : "MISMATCH") : "NO-FORMULA";
  switch (gl.fmt()) {
    case Format::Text:
      out << "alpha=" << o.alpha << " formula=" << formula << " " << verdict << "\n";
      out << "witness " << o.witness << "\n";
      break;
    case Format::Csv:
      print_table(out, {"family", "params", "alpha", "formula", "match", "witness"},
                  {{g.family().name(), join_params(p, " "), std::to_string(o.alpha), formula,
                    o.match() ? "true" : "false", o.witness}},
                  Format::Csv);
      break;
    case Format::Json: {
      ojson rec;
      rec["family"] = family_name(g.family().family);
      rec["params"] = p;
      rec["alpha"] = o.alpha;
      rec["formula"] = o.formula ? ojson(*o.formula) : ojson(nullptr);
      rec["match"] = o.match();
      rec["witness"] = o.witness;
      out << rec.dump() << "\n";
      break;
    }
  }
  return o.formula && !o.match() ? 1 : 0;
}

// ---- fragments

std::string sizes_text(const std::vector<FragmentRecord>& frags) {
  std::vector<std::size_t> sizes;
  for (const auto& f : frags) sizes.push_back(f.size());
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  std::string s = "{";
  for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "," : "") + std::to_string(sizes[i]);
  return s + "}";
}

std::string census_line(const std::vector<FragmentRecord>& frags) {
  std::string s = std::to_string(frags.size()) + " fragments";
  if (frags.empty()) return s;
  const bool singletons = std::all_of(frags.begin(), frags.end(), [](const auto& f) { return f.size() == 1; });
  if (singletons) return s + ", all singletons";
  s += ", sizes " + sizes_text(frags);
  std::size_t nontrivial = 0, balanced = 0, semi = 0;
  for (const auto& f : frags) {
    if (f.is_trivial) continue;
    ++nontrivial;
    balanced += f.is_balanced;
    semi += f.is_semi_imprimitive.value_or(false);
  }
  s += "; " + std::to_string(nontrivial) + " nontrivial";
  if (nontrivial) s += ": " + std::to_string(balanced) + " balanced, " + std::to_string(semi) + " semi-imprimitive";
  return s;
}

std::string flags_text(const FragmentRecord& f) {
  std::string s = f.is_trivial ? "trivial" : "nontrivial";
  if (f.is_balanced) s += " balanced";
  if (f.is_semi_imprimitive) s += *f.is_semi_imprimitive ? " semi-imprimitive" : " not-semi-imprimitive";
  return s;
}

int cmd_fragments(const std::string& family, const std::vector<int>& p, const std::string& side_opt,
                  const std::string& mode_opt, const Globals& gl, std::ostream& out) {
  const auto g = build_or_usage(family, p, gl);
  if (g.is_complete()) throw UsageError("graph is complete: fragments are undefined");
  std::vector<Side> sides;
  if (side_opt == "X" || side_opt == "x") sides = {Side::X};
  else if (side_opt == "Y" || side_opt == "y") sides = {Side::Y};
  else if (side_opt == "both") sides = {Side::X, Side::Y};
  else throw UsageError("--side must be X, Y or both");

  std::optional<GroupAction> action;
  try {
    action.emplace(induced_action(g));
  } catch (const std::exception&) {
  }
  const FragmentCalculus calc(g, action ? &*action : nullptr, gl.workers);
  const std::size_t limit = part_limit(gl.budget_subsets);

  ojson records = ojson::array();
  std::vector<std::vector<std::string>> rows;
  if (gl.fmt() == Format::Text)
    out << "graph = " << g.family().name() << " |X|=" << g.x_size() << " |Y|=" << g.y_size() << "\nalpha = "
        << calc.alpha() << "\n";
  for (Side side : sides) {
    EnumerationMode mode;
    if (mode_opt == "exhaustive") {
      mode = EnumerationMode::full();
    } else if (mode_opt.rfind("bounded:", 0) == 0) {
      const auto k = parse_int(std::string_view(mode_opt).substr(8));
      if (!k || *k < 1) throw UsageError("bad --mode '" + mode_opt + "'");
      mode = EnumerationMode::bounded(static_cast<std::size_t>(*k));
    } else if (mode_opt == "auto") {
      mode = g.size(side) <= limit ? EnumerationMode::full() : EnumerationMode::bounded(3);
    } else {
      throw UsageError("--mode must be exhaustive, bounded:K or auto");
    }
    std::vector<FragmentRecord> frags;
    try {
      frags = calc.enumerate(side, mode, limit);
    } catch (const BudgetExceeded& e) {
      throw UsageError(std::string("budget exceeded: ") + e.what());
    }
    const std::string sname = side_name(side);
    const std::string h = calc.two_fragment_graph(side).summary();
    if (gl.fmt() == Format::Text) {
      out << "eps(" << sname << ") = " << calc.epsilon(side) << "\n";
      out << "census " << sname << " ("
          << (mode.exhaustive ? std::string("exhaustive") : "sizes <= " + std::to_string(mode.max_size))
          << "): " << census_line(frags) << "\n";
      for (const auto& f : frags)
        if (!f.is_trivial) out << "  " << g.set_label(f.members) << " size=" << f.size() << " " << flags_text(f) << "\n";
      out << "H(" << sname << ") = " << h << "\n";
    }
    for (const auto& f : frags) {
      if (gl.fmt() == Format::Json) {
        ojson rec;
        rec["family"] = family_name(g.family().family);
        rec["params"] = p;
        rec["side"] = sname;
        rec["members"] = g.set_label(f.members);
        rec["size"] = f.size();
        rec["trivial"] = f.is_trivial;
        rec["balanced"] = f.is_balanced;
        rec["semi_imprimitive"] = f.is_semi_imprimitive ? ojson(*f.is_semi_imprimitive) : ojson(nullptr);
        out << rec.dump() << "\n";
      } else if (gl.fmt() == Format::Csv) {
        rows.push_back({g.family().name(), sname, g.set_label(f.members), std::to_string(f.size()),
                        f.is_trivial ? "true" : "false", f.is_balanced ? "true" : "false",
                        f.is_semi_imprimitive ? (*f.is_semi_imprimitive ? "true" : "false") : ""});
      }
    }
  }
  if (gl.fmt() == Format::Csv)
    print_table(out, {"family", "side", "members", "size", "trivial", "balanced", "semi_imprimitive"}, rows,
                Format::Csv);
  return 0;
}

// ---- verify

struct TupleResult {
  std::string status;  // PASS / FAIL / SKIPPED / ERROR
  std::string text;    // buffered output for this tuple
  ojson record;
};

TupleResult verify_tuple(const GridTuple& t, Format fmt) {
  TupleResult r;
  const FamilyInfo info{t.family, t.params};
  std::string note, alpha = "-", formula = "-", witness;
  std::optional<VerificationReport> report;
  try {
    const auto& p = t.params;
    switch (t.family) {
      case Family::Sets: check_sets_hypotheses(p[0], p[1], p[2], p[3]); break;
      case Family::Subspaces: check_subspaces_hypotheses(p[0], p[1], p[2], p[3], p[4]); break;
      case Family::Permutations: check_permutations_hypotheses(p[0], p[1]); break;
      default: break;
    }
    const auto g = build_family_graph(t.family, p, t.budget);
    if (g.is_complete()) {
      r.status = "SKIPPED";
      note = "complete graph";
    } else {
      const auto action = induced_action(g);
      VerifyOptions opt;
      opt.exhaustive_part_limit = part_limit(t.subset_budget);
      report = verify_theorem(g, &action, opt);
      r.status = report->overall();
      if (const auto* c = report->find("alpha_formula")) {
        alpha = c->actual;
        formula = c->expected;
        witness = c->witness;
      }
    }
  } catch (const HypothesisError& e) {
    r.status = "SKIPPED";
    note = std::string("hypothesis ") + e.what();
  } catch (const BudgetExceeded& e) {
    r.status = "ERROR";
    note = std::string("budget exceeded: ") + e.what();
  } catch (const std::exception& e) {
    r.status = "ERROR";
    note = e.what();
  }

  std::ostringstream os;
  if (fmt == Format::Text) {
    os << "=== " << info.name() << " (line " << t.line << "): " << r.status;
    if (!note.empty()) os << " [" << note << "]";
    os << "\n";
    if (report) os << report->to_text();
    os << "\n";
  }
  r.text = os.str();
  r.record["family"] = family_name(t.family);
  r.record["params"] = t.params;
  r.record["status"] = r.status;
  r.record["alpha"] = alpha;
  r.record["formula"] = formula;
  r.record["match"] = alpha != "-" && alpha == formula;
  r.record["witness"] = witness;
  r.record["note"] = note;
  return r;
}

int cmd_verify(const std::string& path, const Globals& gl, std::ostream& out, std::ostream& err) {
  std::ifstream is(path);
  if (!is) throw UsageError("cannot read grid file " + path);
  std::stringstream buf;
  buf << is.rdbuf();
  std::vector<GridTuple> tuples;
  try {
    tuples = parse_grid(buf.str());
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
  if (tuples.empty()) throw UsageError(path + ": grid contains no tuples");
  // Command-line budgets override the defaults but not explicit grid lines.
  for (auto& t : tuples) {
    if (t.budget.vertices_per_part == BuildBudget{}.vertices_per_part) t.budget.vertices_per_part = gl.budget_vertices;
    if (t.subset_budget == GridTuple{}.subset_budget) t.subset_budget = gl.budget_subsets;
  }

  std::vector<TupleResult> results(tuples.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tuples.size();) results[i] = verify_tuple(tuples[i], gl.fmt());
  };
  const unsigned n = std::max(1u, std::min<unsigned>(gl.workers, static_cast<unsigned>(tuples.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  std::size_t pass = 0, fail = 0, skipped = 0, errors = 0;
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : results) {
    pass += r.status == "PASS";
    fail += r.status == "FAIL";
    skipped += r.status == "SKIPPED";
    errors += r.status == "ERROR";
    switch (gl.fmt()) {
      case Format::Text: out << r.text; break;
      case Format::Json: out << r.record.dump() << "\n"; break;
      case Format::Csv:
        rows.push_back({r.record["family"], join_params(r.record["params"].get<std::vector<int>>(), " "),
                        r.status, r.record["alpha"], r.record["formula"],
                        r.record["match"].get<bool>() ? "true" : "false", r.record["witness"], r.record["note"]});
        break;
    }
  }
  if (gl.fmt() == Format::Csv)
    print_table(out, {"family", "params", "status", "alpha", "formula", "match", "witness", "note"}, rows,
                Format::Csv);
  std::ostringstream summary;
  summary << "summary: " << results.size() << " tuples, " << pass << " PASS, " << fail << " FAIL, " << skipped
          << " SKIPPED, " << errors << " ERROR";
  if (gl.fmt() == Format::Text) out << summary.str() << "\n";
  else err << summary.str() << "\n";
  if (fail) return 1;
  return errors ? 2 : 0;
}

int cmd_graph(const std::string& family, const std::vector<int>& p, const Globals& gl, std::ostream& out) {
  Globals quiet = gl;
  quiet.dump_graph.clear();
  const auto g = build_or_usage(family, p, quiet);
  if (gl.dump_graph.empty()) {
    out << serialize(g);
  } else {
    std::ofstream os(gl.dump_graph);
    if (!os) throw UsageError("cannot write " + gl.dump_graph);
    os << serialize(g);
    out << "wrote " << g.x_size() << "+" << g.y_size() << " vertices to " << gl.dump_graph << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cross-intersecting family bounds via bipartite fragments"};
  app.name(args.empty() ? "crossint" : args[0]);
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--format", gl.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--budget-vertices", gl.budget_vertices, "Largest part a builder may allocate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--budget-subsets", gl.budget_subsets, "Largest subset count for an exhaustive census")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--dump-graph", gl.dump_graph, "Write the constructed graph to PATH");
  app.add_option("--workers", gl.workers, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();

  std::string family, side = "X", mode = "auto", grid;
  std::vector<std::string> params;

  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds (sets, subspaces, perms, hilton, hm-ft)");
  bounds->add_option("family", family)->required();
  bounds->add_option("params", params)->required();

  auto* alpha = app.add_subcommand("alpha", "Oracle alpha against the degree formula");
  alpha->add_option("family", family)->required();
  alpha->add_option("params", params)->required();

  auto* frags = app.add_subcommand("fragments", "Fragment census");
  frags->add_option("family", family)->required();
  frags->add_option("params", params)->required();
  frags->add_option("--side", side, "X, Y or both")->capture_default_str();
  frags->add_option("--mode", mode, "exhaustive, bounded:K or auto")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run every check over a grid file");
  verify->add_option("gridfile", grid)->required();

  auto* graph = app.add_subcommand("graph", "Build a family graph and print its serialization");
  graph->add_option("family", family)->required();
  graph->add_option("params", params)->required();

  // CLI11 consumes the vector from the back.
  std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*bounds) return cmd_bounds(family, int_params(params), gl, out);
    if (*alpha) return cmd_alpha(family, int_params(params), gl, out);
    if (*frags) return cmd_fragments(family, int_params(params), side, mode, gl, out);
    if (*verify) return cmd_verify(grid, gl, out, err);
    if (*graph) return cmd_graph(family, int_params(params), gl, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    err << "error: budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace crossint
