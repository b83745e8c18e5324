#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "zeckgap/sequence.hpp"

namespace zeckgap {

/// Families serialize as JSON with decimal-string integers so arbitrary
/// precision survives the round trip:
///   {"name": "...", "coefficients": ["1","1"], "initial_terms": ["1","2"]}
inline nlohmann::json family_to_json(const SequenceSpec& spec) {
  nlohmann::json j;
  j["name"] = spec.name;
  j["coefficients"] = nlohmann::json::array();
  for (const BigInt& c : spec.coefficients) j["coefficients"].push_back(c.str());
  j["initial_terms"] = nlohmann::json::array();
  for (const BigInt& t : spec.initial_terms) j["initial_terms"].push_back(t.str());
  return j;
}

inline SequenceSpec family_from_json(const nlohmann::json& j) {
  SequenceSpec spec;
  try {
    spec.name = j.at("name").get<std::string>();
    for (const auto& c : j.at("coefficients")) {
      spec.coefficients.emplace_back(c.get<std::string>());
    }
    for (const auto& t : j.at("initial_terms")) {
      spec.initial_terms.emplace_back(t.get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("family config: ") + e.what());
  }
  spec.validate();
  return spec;
}

inline void save_family_file(const SequenceSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write family file '" + path + "'");
  out << family_to_json(spec).dump(2) << '\n';
}

inline SequenceSpec load_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read family file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("family file '" + path + "': " + e.what());
  }
  return family_from_json(j);
}

}  // namespace zeckgap
