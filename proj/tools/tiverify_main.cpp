#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tiverify/errors.hpp"
#include "tiverify/report_io.hpp"
#include "tiverify/sweep.hpp"

namespace {

using tiv::RunConfig;
using tiv::TheoremId;

/// TIVERIFY_CONFIG may point at a JSON file with default settings; explicit
/// flags override it.
void apply_config_file(RunConfig& config) {
  const char* path = std::getenv("TIVERIFY_CONFIG");
  if (!path || !*path) return;
  std::ifstream in(path);
  if (!in) throw tiv::Error(std::string("cannot open config file: ") + path);
  nlohmann::json j;
  in >> j;
  if (j.contains("max_order")) config.max_order = j["max_order"].get<int>();
  if (j.contains("jobs")) config.jobs = j["jobs"].get<int>();
  if (j.contains("format")) {
    std::string f = j["format"].get<std::string>();
    if (f == "json") config.format = RunConfig::Format::json;
    else if (f == "csv") config.format = RunConfig::Format::csv;
    else if (f == "text") config.format = RunConfig::Format::text;
    else throw tiv::Error("config: unknown format " + f);
  }
  if (j.contains("theorems")) {
    config.theorems.clear();
    for (const auto& t : j["theorems"]) {
      auto id = tiv::theorem_from_name(t.get<std::string>());
      if (!id) throw tiv::Error("config: unknown theorem " + t.get<std::string>());
      config.theorems.insert(*id);
    }
  }
  if (j.contains("corpus_files"))
    for (const auto& f : j["corpus_files"])
      config.corpus_files.push_back(f.get<std::string>());
}

std::vector<tiv::GroupTable> make_corpus(const RunConfig& config) {
  tiv::CorpusConfig cc;
  cc.max_order = config.max_order;
  cc.corpus_files = config.corpus_files;
  return tiv::default_corpus(cc);
}

int run_verify(const RunConfig& config) {
  auto corpus = make_corpus(config);
  tiv::SweepResult result = tiv::run_sweep(config, corpus);
  tiv::write_report(std::cout, result, config.format);
  return tiv::exit_code_for(result);
}

int run_explain(const RunConfig& config, const std::string& group_name, int prime,
                const std::string& theorem) {
  auto id = tiv::theorem_from_name(theorem);
  if (!id) {
    std::cerr << "unknown theorem: " << theorem << "\n";
    return 2;
  }
  auto corpus = make_corpus(config);
  for (const auto& g : corpus) {
    if (g.name() != group_name) continue;
    if (g.order() % prime != 0) {
      std::cerr << prime << " does not divide |" << group_name << "| = " << g.order()
                << "\n";
      return 2;
    }
    std::cout << tiv::explain(g, prime, *id, config.lattice_limits);
    return 0;
  }
  std::cerr << "unknown group: " << group_name << "\n";
  return 2;
}

int run_list(const RunConfig& config) {
  for (const auto& g : make_corpus(config))
    std::cout << g.name() << "\t" << g.order() << "\t" << g.provenance() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group checker: every (filtered) subgroup TI or subnormal or of p'-order"};
  app.require_subcommand(1);

  RunConfig config;
  try {
    apply_config_file(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::string theorems_arg, primes_arg = "all", format_arg;
  auto* verify = app.add_subcommand("verify", "run theorem sweeps over the corpus");
  verify->add_option("--max-order", config.max_order,
                     "skip corpus groups above this order");
  verify->add_option("--theorems", theorems_arg,
                     "comma-separated subset of T1,T2,T3,C1,T5,T6,T7");
  verify->add_option("--primes", primes_arg, "'all' or a single prime");
  verify->add_option("--corpus", config.corpus_files,
                     "extra group file(s) in 'name; degree; cycles...' format")
      ->allow_extra_args(false);
  verify->add_option("--format", format_arg, "text, json or csv");
  verify->add_option("--jobs", config.jobs, "worker threads");
  verify->add_flag("--fail-fast", config.fail_fast,
                   "stop at the first failed biconditional");

  std::string explain_group, explain_theorem;
  int explain_prime = 0;
  auto* explain_cmd =
      app.add_subcommand("explain", "per-subgroup detail for one (group, prime, theorem)");
  explain_cmd->add_option("group", explain_group)->required();
  explain_cmd->add_option("prime", explain_prime)->required();
  explain_cmd->add_option("theorem", explain_theorem)->required();

  auto* list_cmd = app.add_subcommand("list-corpus", "list the built-in corpus");
  list_cmd->add_option("--max-order", config.max_order);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits clean, bad usage exits 2
  }

  try {
    if (!theorems_arg.empty()) {
      config.theorems.clear();
      std::istringstream ss(theorems_arg);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        auto id = tiv::theorem_from_name(tok);
        if (!id) throw tiv::Error("unknown theorem: " + tok);
        config.theorems.insert(*id);
      }
      if (config.theorems.empty()) throw tiv::Error("no theorems selected");
    }
    if (primes_arg != "all") {
      int p = 0;
      try {
        p = std::stoi(primes_arg);
      } catch (const std::exception&) {
        throw tiv::Error("invalid prime: " + primes_arg);
      }
      if (p < 2) throw tiv::Error("invalid prime: " + primes_arg);
      config.prime = p;
    }
    if (!format_arg.empty()) {
      if (format_arg == "json") config.format = RunConfig::Format::json;
      else if (format_arg == "csv") config.format = RunConfig::Format::csv;
      else if (format_arg == "text") config.format = RunConfig::Format::text;
      else throw tiv::Error("unknown format: " + format_arg);
    }

    if (verify->parsed()) return run_verify(config);
    if (explain_cmd->parsed())
      return run_explain(config, explain_group, explain_prime, explain_theorem);
    if (list_cmd->parsed()) return run_list(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
