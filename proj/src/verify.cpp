#include "crossint/verify.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "crossint/exactmath.hpp"
#include "crossint/fragments.hpp"
#include "crossint/oracle.hpp"

namespace crossint {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
    case CheckStatus::Note: return "NOTE";
  }
  return "?";
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string VerificationReport::overall() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return "FAIL";
  for (const char* h : {"non_complete", "biregular", "part_transitive", "fragments_primitive", "alpha_formula"}) {
    const CheckResult* c = find(h);
    if (!c || c->status != CheckStatus::Pass) return "SKIPPED";
  }
  return "PASS";
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "[report]\ngraph = " << graph << "\noverall = " << overall() << "\n";
  for (const auto& c : checks) {
    os << "\n[" << c.name << "]\n";
    os << "status = " << status_name(c.status) << "\n";
    os << "expected = " << (c.expected.empty() ? "-" : c.expected) << "\n";
    os << "actual = " << (c.actual.empty() ? "-" : c.actual) << "\n";
    os << "witness = " << (c.witness.empty() ? "-" : c.witness) << "\n";
  }
  return os.str();
}

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string size_list(const std::set<std::size_t>& sizes) {
  std::string s = "{";
  bool first = true;
  for (auto k : sizes) {
    if (!first) s += ",";
    s += std::to_string(k);
    first = false;
  }
  return s + "}";
}

// Closed-form bound and degree for family graphs whose theorem hypotheses
// hold; nullopt otherwise.
struct ClosedForm {
  BigNat bound;
  BigNat degree;
};

std::optional<ClosedForm> closed_form(const FamilyInfo& f) {
  const auto& p = f.params;
  try {
    switch (f.family) {
      case Family::Sets: return ClosedForm{cross_bound_sets(p[0], p[1], p[2], p[3]), set_degree(p[0], p[1], p[2], p[3])};
      case Family::Subspaces:
        return ClosedForm{cross_bound_subspaces(p[0], p[1], p[2], p[3], p[4]),
                          subspace_degree(p[0], p[1], p[2], p[3], p[4])};
      case Family::Permutations:
        return ClosedForm{cross_bound_permutations(p[0], p[1]), permutation_degree(p[0], p[1])};
      default: return std::nullopt;
    }
  } catch (const HypothesisError&) {
    return std::nullopt;
  }
}

}  // namespace

std::optional<std::vector<std::pair<BitVec, BitVec>>> predicted_extremal_sets(const BipartiteGraph& g) {
  const FamilyInfo& f = g.family();
  if (!closed_form(f)) return std::nullopt;
  const std::size_t nx = g.x_size(), ny = g.y_size();
  std::set<std::pair<BitVec, BitVec>> out;
  auto add_x_singletons = [&] {
    for (std::size_t x = 0; x < nx; ++x) {
      BitVec a(nx);
      a.set(x);
      out.emplace(std::move(a), g.row(Side::X, x).complement());
    }
  };
  auto add_y_singletons = [&] {
    for (std::size_t y = 0; y < ny; ++y) {
      BitVec b(ny);
      b.set(y);
      out.emplace(g.row(Side::Y, y).complement(), std::move(b));
    }
  };
  add_x_singletons();
  if (nx == ny) add_y_singletons();

  if (f.family == Family::Sets && nx == ny) {
    const int n = f.params[0], a = f.params[1], b = f.params[2], t = f.params[3];
    const auto xs = subsets_lex(n, a), ys = subsets_lex(n, b);
    auto pick = [](const std::vector<std::uint64_t>& words, auto pred) {
      BitVec v(words.size());
      for (std::size_t i = 0; i < words.size(); ++i)
        if (pred(words[i])) v.set(i);
      return v;
    };
    if (a == 2 && b == 2 && t == 1) {
      for (int i = 0; i < n; ++i) {
        auto star = [i](std::uint64_t w) { return ((w >> i) & 1u) != 0; };
        out.emplace(pick(xs, star), pick(ys, star));
      }
    }
    if (a == n - 2 && b == n - 2 && t == n - 3) {
      for (auto s : subsets_lex(n, n - 1)) {
        auto inside = [s](std::uint64_t w) { return (w & ~s) == 0; };
        out.emplace(pick(xs, inside), pick(ys, inside));
      }
    }
  }
  return std::vector<std::pair<BitVec, BitVec>>(out.begin(), out.end());
}

VerificationReport verify_theorem(const BipartiteGraph& g, const GroupAction* action, const VerifyOptions& opt) {
  VerificationReport rep;
  rep.graph = g.family().name() + " |X|=" + std::to_string(g.x_size()) + " |Y|=" + std::to_string(g.y_size());
  auto add = [&](std::string name, CheckStatus st, std::string expected, std::string actual, std::string witness = {}) {
    rep.checks.push_back({std::move(name), st, std::move(expected), std::move(actual), std::move(witness)});
  };

  const bool connected = g.is_connected();
  add("connected", connected ? CheckStatus::Pass : CheckStatus::Note, "true", yes_no(connected),
      connected ? "" : "hypothesis discrepancy: graph is disconnected");

  const bool complete = g.is_complete();
  add("non_complete", complete ? CheckStatus::Skip : CheckStatus::Pass, "true", yes_no(!complete));
  if (complete) {
    add("alpha_formula", CheckStatus::Skip, "-", "complete graph has no nontrivial independent set");
    return rep;
  }

  const auto bireg = g.biregularity();
  add("biregular", bireg.regular ? CheckStatus::Pass : CheckStatus::Skip, "true",
      bireg.regular ? "d(X)=" + std::to_string(bireg.dx) + " d(Y)=" + std::to_string(bireg.dy) : "false");
  if (bireg.regular) {
    const bool ok = bireg.dx * g.x_size() == bireg.dy * g.y_size();
    add("edge_count_identity", ok ? CheckStatus::Pass : CheckStatus::Fail,
        "d(X)|X| = d(Y)|Y|", std::to_string(bireg.dx * g.x_size()) + " vs " + std::to_string(bireg.dy * g.y_size()));
  }

  const auto cf = closed_form(g.family());
  if (cf && bireg.regular) {
    const bool ok = cf->degree == BigNat(bireg.dx);
    add("degree_formula", ok ? CheckStatus::Pass : CheckStatus::Fail, cf->degree.str(), std::to_string(bireg.dx));
  }

  bool transitive = false;
  if (action) {
    transitive = is_part_transitive(g, *action);
    add("part_transitive", transitive ? CheckStatus::Pass : CheckStatus::Skip, "true", yes_no(transitive));
  } else {
    add("part_transitive", CheckStatus::Skip, "true", "no group action supplied");
  }

  const NontrivialMisResult mis = alpha_nontrivial(g, opt.workers);
  const FragmentCalculus calc(g, mis.size, transitive ? action : nullptr);

  // ε from α against the exhaustive definition, where feasible.
  if (std::max(g.x_size(), g.y_size()) <= opt.exhaustive_part_limit) {
    const long long ex = epsilon_bruteforce(g, Side::X), ey = epsilon_bruteforce(g, Side::Y);
    const bool ok = ex == calc.epsilon(Side::X) && ey == calc.epsilon(Side::Y);
    add("epsilon_duality", ok ? CheckStatus::Pass : CheckStatus::Fail,
        "eps(X)=" + std::to_string(calc.epsilon(Side::X)) + " eps(Y)=" + std::to_string(calc.epsilon(Side::Y)),
        "eps(X)=" + std::to_string(ex) + " eps(Y)=" + std::to_string(ey));
  }

  // Fragment census on both sides.
  std::vector<FragmentRecord> census[2];
  bool exhaustive[2];
  for (Side side : {Side::X, Side::Y}) {
    const int si = side == Side::X ? 0 : 1;
    exhaustive[si] = g.size(side) <= opt.exhaustive_part_limit;
    auto mode = exhaustive[si] ? EnumerationMode::full() : EnumerationMode::bounded(opt.bounded_census_size);
    auto found = calc.enumerate(side, mode, opt.exhaustive_part_limit);
    if (!exhaustive[si] && transitive) {
      std::set<BitVec> have;
      for (const auto& f : found) have.insert(f.members.bits);
      const std::size_t base = found.size();
      for (std::size_t i = 0; i < base; ++i) {
        if (found[i].size() < 2) continue;
        try {
          for (const auto& img : set_orbit(*action, found[i].members, opt.orbit_cap))
            if (have.insert(img.bits).second) found.push_back(calc.classify(img));
        } catch (const CapExceeded&) {
        }
      }
      std::sort(found.begin(), found.end(),
                [](const FragmentRecord& a, const FragmentRecord& b) { return a.members.bits < b.members.bits; });
    }
    std::set<std::size_t> sizes;
    std::size_t nontrivial = 0;
    for (const auto& f : found) {
      sizes.insert(f.size());
      nontrivial += !f.is_trivial;
    }
    add(std::string("census_") + side_name(side), CheckStatus::Note,
        exhaustive[si] ? "exhaustive" : "sizes <= " + std::to_string(opt.bounded_census_size) + " plus orbits",
        std::to_string(found.size()) + " fragments, sizes " + size_list(sizes) + ", " + std::to_string(nontrivial) +
            " nontrivial");
    census[si] = std::move(found);
  }

  {
    bool ok = true;
    std::string witness;
    for (const auto& side_census : census)
      for (const auto& f : side_census) {
        const FragmentRecord p = calc.phi(f);
        const FragmentRecord pp = calc.phi(p);
        if (!(pp.members == f.members) || f.size() + p.size() != mis.size) {
          ok = false;
          witness = g.set_label(f.members);
        }
      }
    add("phi_involution", ok ? CheckStatus::Pass : CheckStatus::Fail, "phi(phi(A)) = A and |A|+|phi(A)| = alpha",
        ok ? "holds on census" : "violated", witness);
  }

  bool primitive = false;
  if (transitive) {
    primitive = true;
    std::string witness;
    for (const auto& side_census : census)
      for (const auto& f : side_census)
        if (primitive && is_imprimitive_set(*action, f.members, opt.orbit_cap)) {
          primitive = false;
          witness = g.set_label(f.members);
        }
    const bool all_exhaustive = exhaustive[0] && exhaustive[1];
    add("fragments_primitive", primitive ? CheckStatus::Pass : CheckStatus::Skip, "no fragment is an imprimitive set",
        primitive ? (all_exhaustive ? "verified exhaustively"
                                    : "verified up to size " + std::to_string(opt.bounded_census_size))
                  : "imprimitive fragment found",
        witness);
  } else {
    add("fragments_primitive", CheckStatus::Skip, "no fragment is an imprimitive set", "needs a part-transitive action");
  }

  const bool hypotheses = transitive && primitive && bireg.regular;
  const Side small = g.x_size() <= g.y_size() ? Side::X : Side::Y;
  const Side large = opposite(small);
  const std::size_t d_small = small == Side::X ? bireg.dx : bireg.dy;
  auto conclusion = [&](bool ok) {
    return ok ? CheckStatus::Pass : (hypotheses ? CheckStatus::Fail : CheckStatus::Skip);
  };

  const std::string witness = "A=" + g.set_label(mis.witness_a) + " B=" + g.set_label(mis.witness_b);
  if (bireg.regular) {
    const std::size_t formula = g.size(large) - d_small + 1;
    add("alpha_formula", conclusion(formula == mis.size), std::to_string(formula), std::to_string(mis.size), witness);
  } else {
    add("alpha_formula", CheckStatus::Skip, "-", std::to_string(mis.size), witness);
  }
  if (cf) {
    const bool ok = cf->bound == BigNat(mis.size);
    add("closed_form_bound", ok ? CheckStatus::Pass : CheckStatus::Fail, cf->bound.str(), std::to_string(mis.size));
  }

  if (bireg.regular) {
    const int si_small = small == Side::X ? 0 : 1;
    if (g.x_size() != g.y_size()) {
      bool ok = true;
      std::string w;
      for (const auto& f : census[si_small])
        if (f.size() != 1) {
          ok = false;
          w = g.set_label(f.members);
        }
      add("fragment_sizes", conclusion(ok), "every fragment in the smaller part has size 1",
          ok ? "holds" : "violated", w);
    } else {
      const std::size_t other = g.x_size() - bireg.dx;
      bool sizes_ok = true;
      for (const auto& f : census[0])
        if (f.size() != 1 && f.size() != other) sizes_ok = false;
      std::string semi;
      for (const auto& side_census : census)
        for (const auto& f : side_census)
          if (semi.empty() && !f.is_trivial && f.is_semi_imprimitive.value_or(false)) semi = g.set_label(f.members);
      const bool ok = sizes_ok || !semi.empty();
      add("fragment_sizes", conclusion(ok),
          "sizes in {1," + std::to_string(other) + "} unless a semi-imprimitive fragment exists",
          sizes_ok ? "sizes conform" : (semi.empty() ? "violated" : "semi-imprimitive fragment exhibited"), semi);
    }

    std::string h_summary[2];
    for (Side side : {Side::X, Side::Y}) {
      h_summary[side == Side::X ? 0 : 1] = calc.two_fragment_graph(side).summary();
      add(std::string("two_fragment_graph_") + side_name(side), CheckStatus::Note, "-",
          h_summary[side == Side::X ? 0 : 1]);
    }

    // Minimal nontrivial fragments are balanced when no 2-fragments exist.
    std::optional<std::size_t> min_nontrivial;
    for (const auto& side_census : census)
      for (const auto& f : side_census)
        if (!f.is_trivial && (!min_nontrivial || f.size() < *min_nontrivial)) min_nontrivial = f.size();
    const bool applicable = g.x_size() == g.y_size() && transitive &&
                            calc.epsilon(Side::X) == static_cast<long long>(bireg.dx) - 1 &&
                            h_summary[0] == "empty" && h_summary[1] == "empty" && min_nontrivial;
    if (applicable) {
      bool ok = true;
      std::string w;
      for (const auto& side_census : census)
        for (const auto& f : side_census)
          if (!f.is_trivial && f.size() == *min_nontrivial && !f.is_balanced) {
            ok = false;
            w = g.set_label(f.members);
          }
      add("minimal_nontrivial_balanced", ok ? CheckStatus::Pass : CheckStatus::Fail,
          "size " + std::to_string(mis.size / 2), "minimal nontrivial size " + std::to_string(*min_nontrivial), w);
    } else {
      add("minimal_nontrivial_balanced", CheckStatus::Skip, "-",
          min_nontrivial ? "preconditions not met" : "no nontrivial fragment");
    }
  }

  // Extremal families.
  if (g.x_size() + g.y_size() > opt.enumeration_vertex_budget) {
    add("extremal_sets", CheckStatus::Skip, "-",
        "enumeration budget " + std::to_string(opt.enumeration_vertex_budget) + " vertices exceeded");
    return rep;
  }
  std::vector<NontrivialMisResult> all;
  try {
    all = enumerate_max_nontrivial(g, {opt.enumeration_vertex_budget, opt.enumeration_node_cap});
  } catch (const std::length_error& e) {
    add("extremal_sets", CheckStatus::Skip, "-", e.what());
    return rep;
  }
  {
    bool ok = true;
    std::string w;
    for (const auto& m : all) {
      const bool sized = m.size == mis.size;
      const bool frag = calc.is_fragment(m.witness_a) &&
                        g.neighborhood(Side::X, m.witness_a.bits).complement() == m.witness_b.bits;
      if (!sized || !frag) {
        ok = false;
        w = "A=" + g.set_label(m.witness_a) + " B=" + g.set_label(m.witness_b);
      }
    }
    add("extremal_decomposition", ok ? CheckStatus::Pass : CheckStatus::Fail, "each maximum set is F + phi(F)",
        std::to_string(all.size()) + " maximum nontrivial independent sets", w);
  }
  if (auto predicted = predicted_extremal_sets(g)) {
    std::vector<std::pair<BitVec, BitVec>> got;
    for (const auto& m : all) got.emplace_back(m.witness_a.bits, m.witness_b.bits);
    const bool ok = got == *predicted;
    add("extremal_sets", ok ? CheckStatus::Pass : CheckStatus::Fail, std::to_string(predicted->size()) + " predicted",
        std::to_string(got.size()) + " enumerated");
  }
  return rep;
}

}  // namespace crossint
