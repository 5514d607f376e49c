#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace mutlab {

// All knobs serialized into every report; equal configs must reproduce
// byte-identical reports, so nothing time- or host-dependent belongs here.
struct RunConfig {
  std::uint64_t seed = 1;
  double accept_tol = 1e-8;
  double dedup_tol = 1e-4;
  double trace_tol = 1e-6;
  int restarts = 200;
  std::string fixture_dir = "fixtures";

  nlohmann::ordered_json to_json() const;
};

// Fixed table of claim ids checked by the tool; every check record carries
// one of these.
const std::map<std::string, std::string>& claim_registry();
const std::string& claim_statement(const std::string& id);

struct CheckRecord {
  std::string claim;                        // id from the registry
  std::string status;                       // "pass" | "fail" | "flag"
  std::map<std::string, double> residuals;  // named residuals/values
  nlohmann::ordered_json values;            // free-form payload

  static CheckRecord make(const std::string& claim, bool pass);
};

struct Report {
  std::string command;
  RunConfig config;
  std::vector<CheckRecord> checks;
  nlohmann::ordered_json payload;  // command-specific output

  void add(CheckRecord r) { checks.push_back(std::move(r)); }
  bool all_passed() const;  // flags count as passed
  nlohmann::ordered_json to_json() const;
  int exit_code() const { return all_passed() ? 0 : 1; }
};

}  // namespace mutlab
