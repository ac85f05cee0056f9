#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/config.hpp"

namespace sbolab::cli {

inline constexpr const char* kArtifactVersion = "0.1.0";

/// "identity": a stated identity checked directly; "oracle": comparison with
/// an independently derived reference (numeric transform, quadrature, exact solve).
enum class Provenance { Identity, Oracle };

struct CaseRecord {
  std::string name;
  std::string anchor;
  Provenance provenance = Provenance::Identity;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json computed;
  nlohmann::json reference;
  double error = 0.0;
  double tolerance = 0.0;
  // Grid identities also bound the absolute errors taken where the reference vanishes.
  std::optional<double> abs_error;
  double abs_tolerance = 1e-12;
  bool pass = false;
};

struct Report {
  std::string suite;
  nlohmann::json config;
  std::vector<CaseRecord> cases;
  std::vector<std::string> notes;
  double wall_time_s = 0.0;

  /// Appends the case with pass = (error <= tolerance, abs_error <= abs_tolerance); NaN errors fail.
  CaseRecord& add(CaseRecord c);
  std::size_t passed() const;
  double max_error() const;
  bool all_pass() const { return passed() == cases.size(); }

  nlohmann::json to_json() const;
  /// One row per case: index,name,anchor,inputs,computed,reference,error,tolerance,pass
  /// with the JSON-valued columns written compactly and quoted.
  std::string to_csv() const;
};

void write_text(const std::string& path, const std::string& text);

}  // namespace sbolab::cli
