#include <doctest.h>

#include "crossint/oracle.hpp"
#include "crossint/verify.hpp"

using namespace crossint;

namespace {

CheckStatus status_of(const VerificationReport& r, const std::string& name) {
  const auto* c = r.find(name);
  REQUIRE_MESSAGE(c != nullptr, name);
  return c->status;
}

VerificationReport run(const BipartiteGraph& g) {
  const auto a = induced_action(g);
  return verify_theorem(g, &a);
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("sets(6,2,3,1)") {
  const auto r = run(build_set_graph(6, 2, 3, 1));
  CHECK(r.overall() == "PASS");
  CHECK(r.find("alpha_formula")->actual == "17");
  CHECK(r.find("alpha_formula")->expected == "17");
  CHECK(status_of(r, "fragment_sizes") == CheckStatus::Pass);
  CHECK(r.find("census_X")->actual == "15 fragments, sizes {1}, 0 nontrivial");
  CHECK(status_of(r, "extremal_sets") == CheckStatus::Pass);
  CHECK(status_of(r, "epsilon_duality") == CheckStatus::Pass);
}

TEST_CASE("sets(5,2,2,1)") {
  const auto r = run(build_set_graph(5, 2, 2, 1));
  CHECK(r.overall() == "PASS");
  CHECK(r.find("alpha_formula")->actual == "8");
  CHECK(status_of(r, "minimal_nontrivial_balanced") == CheckStatus::Pass);
  CHECK(status_of(r, "extremal_sets") == CheckStatus::Pass);
  CHECK(r.find("extremal_sets")->actual == "25 enumerated");
  CHECK(status_of(r, "fragment_sizes") == CheckStatus::Pass);
  CHECK(r.find("fragment_sizes")->actual == "semi-imprimitive fragment exhibited");
}

TEST_CASE("sets(5,3,3,2) balanced minimal fragments") {
  const auto r = run(build_set_graph(5, 3, 3, 2));
  CHECK(r.overall() == "PASS");
  CHECK(status_of(r, "minimal_nontrivial_balanced") == CheckStatus::Pass);
  CHECK(status_of(r, "extremal_sets") == CheckStatus::Pass);
}

TEST_CASE("perms(4,2)") {
  const auto r = run(build_permutation_graph(4, 2));
  CHECK(r.overall() == "PASS");
  CHECK(r.find("alpha_formula")->actual == "8");
  CHECK(r.find("census_X")->actual.find("0 nontrivial") != std::string::npos);
}

TEST_CASE("predicted extremal sets") {
  const auto p = predicted_extremal_sets(build_set_graph(5, 2, 2, 1));
  REQUIRE(p);
  CHECK(p->size() == 25);
  CHECK_FALSE(predicted_extremal_sets(build_set_graph(4, 2, 2, 1)));
  CHECK_FALSE(predicted_extremal_sets(build_circulant_graph(5, 3)));
  const auto q = predicted_extremal_sets(build_set_graph(6, 2, 3, 1));
  REQUIRE(q);
  CHECK(q->size() == 15);
  const auto perm = predicted_extremal_sets(build_permutation_graph(4, 2));
  REQUIRE(perm);
  CHECK(perm->size() == 48);
}

TEST_CASE("hypothesis failures are reported, not thrown") {
  // imprimitive action: the 2-subset graph on [4]
  const auto g = build_set_graph(4, 2, 2, 1);
  const auto r = run(g);
  CHECK(r.overall() != "FAIL");

  const auto k = BipartiteGraph::from_rows(2, 2, {BitVec::full(2), BitVec::full(2)});
  const auto rk = verify_theorem(k, nullptr);
  CHECK(rk.overall() == "SKIPPED");
  CHECK(status_of(rk, "non_complete") == CheckStatus::Skip);

  const auto d = build_circulant_graph(6, 1);
  const auto rd = verify_theorem(d, nullptr);
  CHECK(status_of(rd, "connected") == CheckStatus::Note);
  CHECK(status_of(rd, "part_transitive") == CheckStatus::Skip);
  CHECK(rd.overall() == "SKIPPED");
}

TEST_CASE("report text is stable") {
  const auto r = run(build_circulant_graph(5, 3));
  const std::string text = r.to_text();
  CHECK(text.rfind("[report]\ngraph = circulant(5,3) |X|=5 |Y|=5\noverall = PASS\n", 0) == 0);
  CHECK(text.find("\n[alpha_formula]\nstatus = PASS\nexpected = 3\nactual = 3\n") != std::string::npos);
  CHECK(text.find("[two_fragment_graph_X]\nstatus = NOTE\nexpected = -\nactual = 5-cycle\n") != std::string::npos);
  CHECK(text == run(build_circulant_graph(5, 3)).to_text());
}

}
