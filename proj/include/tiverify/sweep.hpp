#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tiverify/corpus.hpp"
#include "tiverify/theorems.hpp"

namespace tiv {

struct RunConfig {
  int max_order = 512;
  std::set<TheoremId> theorems = {TheoremId::T1, TheoremId::T2, TheoremId::T3,
                                  TheoremId::C1, TheoremId::T5, TheoremId::T6,
                                  TheoremId::T7};
  std::optional<int> prime;  // nullopt = all primes dividing each order
  std::vector<std::string> corpus_files;
  enum class Format { text, json, csv };
  Format format = Format::text;
  int jobs = 1;
  bool fail_fast = false;
  LatticeLimits lattice_limits;
};

/// Exercised-case bookkeeping for the structure theorems: how many corpus
/// instances matched each RHS case.
struct CaseCoverage {
  std::map<std::string, long> counts;  // "T1/C2" -> instances

  static const std::vector<std::pair<std::string, std::string>>& universe();
  std::vector<std::string> lines() const;  // explicit "not exercised" included
};

struct SweepSummary {
  long checked = 0;
  long held = 0;
  long failed = 0;
  long skipped = 0;
};

struct SweepResult {
  std::vector<TheoremReport> reports;  // sorted by (group, prime, theorem)
  std::vector<std::pair<std::string, std::string>> skipped_groups;  // name, reason
  CaseCoverage coverage;
  SweepSummary summary;
};

/// Runs every selected theorem on every corpus group within the cap and
/// every applicable prime. Groups whose lattice exceeds the caps are
/// reported as skipped, never as failed. Deterministic output for any job
/// count: reports are buffered and sorted before emission.
SweepResult run_sweep(const RunConfig& config, const std::vector<GroupTable>& corpus);

/// 0: everything held; 1: at least one failed biconditional or
/// falsification candidate. (Configuration and parse problems surface as
/// exceptions and exit 2 in the CLI.)
int exit_code_for(const SweepResult& result);

void write_report(std::ostream& out, const SweepResult& result,
                  RunConfig::Format format);

/// Detailed single-verdict report: lattice summary, per-subgroup predicate
/// table, Frobenius decomposition, case evaluation trace.
std::string explain(const GroupTable& g, int p, TheoremId id,
                    const LatticeLimits& limits = {});

}  // namespace tiv
