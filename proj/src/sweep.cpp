#include "tiverify/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "tiverify/errors.hpp"
#include "tiverify/predicates.hpp"
#include "tiverify/report_io.hpp"

namespace tiv {

const std::vector<std::pair<std::string, std::string>>& CaseCoverage::universe() {
  static const std::vector<std::pair<std::string, std::string>> cases = {
      {"T1", "C1_subnormal"}, {"T1", "C2"}, {"T1", "C3"}, {"T1", "C4"},
      {"T2", "C1_subnormal_nn"}, {"T2", "C2"},
      {"T3", "C1_subnormal_na"}, {"T3", "C2_Q8H"}, {"T3", "C3"},
  };
  return cases;
}

std::vector<std::string> CaseCoverage::lines() const {
  std::vector<std::string> out;
  for (const auto& [theorem, label] : universe()) {
    auto it = counts.find(theorem + "/" + label);
    long n = it == counts.end() ? 0 : it->second;
    if (n > 0)
      out.push_back(theorem + " case " + label + ": exercised by " +
                    std::to_string(n) + " instance(s)");
    else
      out.push_back(theorem + " case " + label +
                    ": NOT exercised by any corpus instance within the caps");
  }
  return out;
}

namespace {

int theorem_sort_key(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return 0;
    case TheoremId::T2: return 1;
    case TheoremId::T3: return 2;
    case TheoremId::C1: return 3;
    case TheoremId::T5: return 4;
    case TheoremId::T6: return 5;
    case TheoremId::T7: return 6;
  }
  return 7;
}

struct GroupOutcome {
  std::vector<TheoremReport> reports;
  std::optional<std::string> skip_reason;
};

GroupOutcome analyze_group(const GroupTable& g, const RunConfig& config) {
  GroupOutcome out;
  GroupAnalysis analysis(g, config.lattice_limits);
  auto primes = prime_divisors(g.order());
  for (int p : primes) {
    if (config.prime && *config.prime != p) continue;
    for (TheoremId id : config.theorems) {
      if (id == TheoremId::C1) continue;
      out.reports.push_back(verify(analysis, p, id));
    }
  }
  if (config.theorems.count(TheoremId::C1) && g.order() > 1 &&
      (!config.prime || *config.prime == primes.front()))
    out.reports.push_back(verify_corollary1(analysis));
  return out;
}

}  // namespace

SweepResult run_sweep(const RunConfig& config, const std::vector<GroupTable>& corpus) {
  if (config.max_order > config.lattice_limits.max_order)
    throw Error("max_order exceeds the lattice cap");
  if (config.jobs < 1) throw Error("job count must be >= 1");

  SweepResult result;
  std::vector<const GroupTable*> work;
  for (const GroupTable& g : corpus) {
    if (g.order() > config.max_order) {
      result.skipped_groups.emplace_back(
          g.name(), "order exceeds max_order " + std::to_string(config.max_order));
      continue;
    }
    work.push_back(&g);
  }

  std::vector<GroupOutcome> outcomes(work.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex error_mutex;
  std::string worker_error;
  auto worker = [&]() {
    while (!stop.load(std::memory_order_relaxed)) {
      size_t i = next.fetch_add(1);
      if (i >= work.size()) break;
      try {
        outcomes[i] = analyze_group(*work[i], config);
      } catch (const CapError& e) {
        outcomes[i].skip_reason = e.what();
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        worker_error = std::string(work[i]->name()) + ": " + e.what();
        stop.store(true);
      }
      if (config.fail_fast)
        for (const auto& rep : outcomes[i].reports)
          if (!rep.biconditional_holds) stop.store(true);
    }
  };

  int jobs = std::min<int>(config.jobs, static_cast<int>(work.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (!worker_error.empty()) throw Error(worker_error);

  for (size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].skip_reason) {
      result.skipped_groups.emplace_back(work[i]->name(), *outcomes[i].skip_reason);
      continue;
    }
    for (auto& rep : outcomes[i].reports) result.reports.push_back(std::move(rep));
  }

  std::sort(result.reports.begin(), result.reports.end(),
            [](const TheoremReport& a, const TheoremReport& b) {
              if (a.group_name != b.group_name) return a.group_name < b.group_name;
              if (a.prime != b.prime) return a.prime < b.prime;
              return theorem_sort_key(a.theorem) < theorem_sort_key(b.theorem);
            });

  // Test hook: force one failure to exercise the nonzero-exit path end to
  // end. Real corpora never fail, so this is the only way to drive it.
  if (std::getenv("TIVERIFY_TEST_FORCE_FAIL") && !result.reports.empty()) {
    result.reports.front().biconditional_holds = false;
    result.reports.front().witness = "injected failure (TIVERIFY_TEST_FORCE_FAIL)";
  }

  for (const auto& rep : result.reports) {
    ++result.summary.checked;
    if (rep.biconditional_holds && !rep.falsification_candidate)
      ++result.summary.held;
    else
      ++result.summary.failed;
    if (rep.rhs_case &&
        (rep.theorem == TheoremId::T1 || rep.theorem == TheoremId::T2 ||
         rep.theorem == TheoremId::T3)) {
      std::string key = std::string(theorem_name(rep.theorem)) + "/" + *rep.rhs_case;
      ++result.coverage.counts[key];
    }
  }
  result.summary.skipped = static_cast<long>(result.skipped_groups.size());
  return result;
}

int exit_code_for(const SweepResult& result) {
  return result.summary.failed > 0 ? 1 : 0;
}

void write_report(std::ostream& out, const SweepResult& result,
                  RunConfig::Format format) {
  using Format = RunConfig::Format;
  const SweepSummary& s = result.summary;
  switch (format) {
    case Format::text: {
      for (const auto& rep : result.reports) out << report_to_text_line(rep) << '\n';
      out << "\ncase coverage:\n";
      for (const auto& line : result.coverage.lines()) out << "  " << line << '\n';
      if (!result.skipped_groups.empty()) {
        out << "\nskipped groups:\n";
        for (const auto& [name, reason] : result.skipped_groups)
          out << "  " << name << ": " << reason << '\n';
      }
      out << "\nchecked=" << s.checked << " held=" << s.held << " failed=" << s.failed
          << " skipped=" << s.skipped << '\n';
      break;
    }
    case Format::json: {
      nlohmann::json j;
      j["reports"] = nlohmann::json::array();
      for (const auto& rep : result.reports) j["reports"].push_back(report_to_json(rep));
      j["coverage"] = nlohmann::json::object();
      for (const auto& [theorem, label] : CaseCoverage::universe()) {
        auto it = result.coverage.counts.find(theorem + "/" + label);
        j["coverage"][theorem + "/" + label] =
            it == result.coverage.counts.end() ? 0 : it->second;
      }
      j["coverage_lines"] = result.coverage.lines();
      j["skipped"] = nlohmann::json::array();
      for (const auto& [name, reason] : result.skipped_groups)
        j["skipped"].push_back({{"group", name}, {"reason", reason}});
      j["summary"] = {{"checked", s.checked},
                      {"held", s.held},
                      {"failed", s.failed},
                      {"skipped", s.skipped}};
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      out << csv_header() << '\n';
      for (const auto& rep : result.reports) out << report_to_csv_row(rep) << '\n';
      for (const auto& line : result.coverage.lines()) out << "# " << line << '\n';
      for (const auto& [name, reason] : result.skipped_groups)
        out << "# skipped " << name << ": " << reason << '\n';
      out << "# checked=" << s.checked << " held=" << s.held << " failed=" << s.failed
          << " skipped=" << s.skipped << '\n';
      break;
    }
  }
}

std::string explain(const GroupTable& g, int p, TheoremId id,
                    const LatticeLimits& limits) {
  GroupAnalysis a(g, limits);
  std::ostringstream out;
  out << g.name() << ": order " << g.order() << ", " << g.provenance() << '\n';
  out << "primes:";
  for (int q : prime_divisors(g.order())) out << ' ' << q;
  out << "\nlattice: " << a.lattice().size() << " subgroups in "
      << a.lattice().conjugacy_classes.size() << " conjugacy classes\n\n";

  out << "  idx  order  TI  subnormal  p'-order  self-centralizing\n";
  for (int i = 0; i < a.lattice().size(); ++i) {
    const auto& f = a.facts(i);
    const Subgroup& h = a.lattice().all[i];
    char buf[96];
    std::snprintf(buf, sizeof buf, "  %3d  %5d  %2d  %9d  %8d  %17d\n", i, h.order,
                  f.ti ? 1 : 0, f.subnormal ? 1 : 0, h.order % p != 0 ? 1 : 0,
                  f.self_centralizing ? 1 : 0);
    out << buf;
  }

  out << '\n';
  if (const auto& fd = a.frobenius()) {
    out << "Frobenius decomposition: kernel order " << fd->kernel.order;
    if (fd->kernel_prime)
      out << " = Z" << *fd->kernel_prime << "^" << *fd->kernel_rank;
    out << ", complement order " << fd->complement.order << '\n';
  } else {
    out << "no Frobenius decomposition\n";
  }

  TheoremReport rep = verify(a, p, id);
  std::vector<std::string> trace;
  switch (id) {
    case TheoremId::T1: rhs_theorem1(a, p, &trace); break;
    case TheoremId::T2: rhs_theorem2(a, p, &trace); break;
    case TheoremId::T3: rhs_theorem3(a, p, &trace); break;
    default: break;
  }
  if (!trace.empty()) {
    out << "case evaluation:\n";
    for (const auto& line : trace) out << "  " << line << '\n';
  }
  out << '\n' << report_to_text_line(rep) << '\n';
  if (rep.witness && !rep.falsification_candidate)
    out << "LHS witness: " << *rep.witness << '\n';
  return out.str();
}

}  // namespace tiv
