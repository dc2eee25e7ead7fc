#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crossint/bigraph.hpp"
#include "crossint/groupact.hpp"

namespace crossint {

enum class CheckStatus { Pass, Fail, Skip, Note };
const char* status_name(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Note;
  std::string expected;
  std::string actual;
  std::string witness;
};

struct VerificationReport {
  std::string graph;
  std::vector<CheckResult> checks;

  // FAIL if any check failed; SKIPPED if the theorem's hypotheses were not
  // met; PASS otherwise.
  std::string overall() const;
  const CheckResult* find(const std::string& name) const;
  // Stable "[section]" / "key = value" text.
  std::string to_text() const;
};

struct VerifyOptions {
  std::size_t exhaustive_part_limit = 24;   // census is exhaustive up to this part size
  std::size_t bounded_census_size = 3;      // otherwise fragments of size <= this
  std::size_t enumeration_vertex_budget = 64;  // extremal-family enumeration
  std::size_t enumeration_node_cap = 1'000'000;
  std::size_t orbit_cap = 100'000;
  unsigned workers = 1;
};

// Runs every check of the part-transitive theorem on one graph. Hypothesis
// failures become report entries; nothing throws for a non-conforming graph.
VerificationReport verify_theorem(const BipartiteGraph& g, const GroupAction* action, const VerifyOptions& options = {});

// The maximum nontrivial independent sets predicted for a family graph whose
// parameters satisfy the family's theorem, as (A, B) pairs; nullopt for
// families without a characterization.
std::optional<std::vector<std::pair<BitVec, BitVec>>> predicted_extremal_sets(const BipartiteGraph& g);

}  // namespace crossint
