#include "tiverify/report_io.hpp"

#include <sstream>

#include "tiverify/errors.hpp"

namespace tiv {

using nlohmann::json;

json report_to_json(const TheoremReport& rep) {
  json j;
  j["group"] = rep.group_name;
  j["order"] = rep.group_order;
  j["prime"] = rep.prime;
  j["theorem"] = theorem_name(rep.theorem);
  j["lhs"] = rep.lhs;
  j["rhs_case"] = rep.rhs_case ? json(*rep.rhs_case) : json(nullptr);
  j["holds"] = rep.biconditional_holds;
  j["falsification_candidate"] = rep.falsification_candidate;
  j["unrestricted_lhs"] =
      rep.unrestricted_lhs ? json(*rep.unrestricted_lhs) : json(nullptr);
  j["witness_index"] = rep.witness_index ? json(*rep.witness_index) : json(nullptr);
  j["witness_order"] = rep.witness_order ? json(*rep.witness_order) : json(nullptr);
  j["witness"] = rep.witness ? json(*rep.witness) : json(nullptr);
  return j;
}

TheoremReport report_from_json(const json& j) {
  TheoremReport rep;
  rep.group_name = j.at("group").get<std::string>();
  rep.group_order = j.at("order").get<int>();
  rep.prime = j.at("prime").get<int>();
  auto id = theorem_from_name(j.at("theorem").get<std::string>());
  if (!id) throw Error("unknown theorem id in report");
  rep.theorem = *id;
  rep.lhs = j.at("lhs").get<bool>();
  if (!j.at("rhs_case").is_null()) rep.rhs_case = j.at("rhs_case").get<std::string>();
  rep.biconditional_holds = j.at("holds").get<bool>();
  rep.falsification_candidate = j.at("falsification_candidate").get<bool>();
  if (!j.at("unrestricted_lhs").is_null())
    rep.unrestricted_lhs = j.at("unrestricted_lhs").get<bool>();
  if (!j.at("witness_index").is_null())
    rep.witness_index = j.at("witness_index").get<int>();
  if (!j.at("witness_order").is_null())
    rep.witness_order = j.at("witness_order").get<int>();
  if (!j.at("witness").is_null()) rep.witness = j.at("witness").get<std::string>();
  return rep;
}

namespace {

std::string csv_escape(const std::string& s) {
  bool needs_quotes = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs_quotes) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string csv_header() { return "group,order,prime,theorem,lhs,rhs_case,holds,witness"; }

std::string report_to_csv_row(const TheoremReport& rep) {
  std::ostringstream out;
  out << csv_escape(rep.group_name) << ',' << rep.group_order << ',' << rep.prime
      << ',' << theorem_name(rep.theorem) << ',' << (rep.lhs ? "true" : "false")
      << ',' << (rep.rhs_case ? *rep.rhs_case : "") << ','
      << (rep.biconditional_holds ? "true" : "false") << ','
      << csv_escape(rep.witness ? *rep.witness : "");
  return out.str();
}

std::string report_to_text_line(const TheoremReport& rep) {
  std::ostringstream out;
  out << (rep.biconditional_holds ? "[ok]  " : "[FAIL]") << ' ' << rep.group_name
      << " (order " << rep.group_order << ") p=" << rep.prime << ' '
      << theorem_name(rep.theorem) << ": lhs=" << (rep.lhs ? "true" : "false");
  if (rep.unrestricted_lhs)
    out << " unrestricted=" << (*rep.unrestricted_lhs ? "true" : "false");
  else
    out << " case=" << (rep.rhs_case ? *rep.rhs_case : "-");
  if (rep.falsification_candidate) out << " FALSIFICATION-CANDIDATE";
  if (!rep.biconditional_holds && rep.witness) out << " witness: " << *rep.witness;
  return out.str();
}

bool reports_equal(const TheoremReport& a, const TheoremReport& b) {
  return a.group_name == b.group_name && a.group_order == b.group_order &&
         a.prime == b.prime && a.theorem == b.theorem && a.lhs == b.lhs &&
         a.rhs_case == b.rhs_case && a.biconditional_holds == b.biconditional_holds &&
         a.falsification_candidate == b.falsification_candidate &&
         a.unrestricted_lhs == b.unrestricted_lhs &&
         a.witness_index == b.witness_index && a.witness_order == b.witness_order &&
         a.witness == b.witness;
}

}  // namespace tiv
