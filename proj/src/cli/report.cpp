#include "cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sbolab/errors.hpp"

namespace sbolab::cli {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string json_field(const nlohmann::json& j) { return csv_field(j.is_string() ? j.get<std::string>() : j.dump()); }

std::string number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

CaseRecord& Report::add(CaseRecord c) {
  c.pass = std::isfinite(c.error) && c.error <= c.tolerance;
  if (c.abs_error) c.pass = c.pass && std::isfinite(*c.abs_error) && *c.abs_error <= c.abs_tolerance;
  cases.push_back(std::move(c));
  return cases.back();
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseRecord& c) { return c.pass; }));
}

double Report::max_error() const {
  double m = 0.0;
  for (const auto& c : cases) {
    if (!std::isfinite(c.error)) return c.error;
    m = std::max(m, c.error);
  }
  return m;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["artifact_version"] = kArtifactVersion;
  j["suite"] = suite;
  j["config"] = config;
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const CaseRecord& c = cases[i];
    nlohmann::json r;
    r["index"] = i;
    r["name"] = c.name;
    r["anchor"] = c.anchor;
    r["provenance"] = c.provenance == Provenance::Identity ? "identity" : "oracle";
    r["inputs"] = c.inputs;
    r["computed"] = c.computed;
    r["reference"] = c.reference;
    r["error"] = std::isfinite(c.error) ? nlohmann::json(c.error) : nlohmann::json(nullptr);
    r["tolerance"] = c.tolerance;
    if (c.abs_error) {
      r["abs_error"] = std::isfinite(*c.abs_error) ? nlohmann::json(*c.abs_error) : nlohmann::json(nullptr);
      r["abs_tolerance"] = c.abs_tolerance;
    }
    r["pass"] = c.pass;
    arr.push_back(std::move(r));
  }
  j["cases"] = std::move(arr);
  const double me = max_error();
  j["summary"] = {{"cases", cases.size()},
                  {"passed", passed()},
                  {"failed", cases.size() - passed()},
                  {"max_error", std::isfinite(me) ? nlohmann::json(me) : nlohmann::json(nullptr)},
                  {"wall_time_s", wall_time_s}};
  j["notes"] = notes;
  return j;
}

std::string Report::to_csv() const {
  std::string out = "index,name,anchor,inputs,computed,reference,error,tolerance,pass\n";
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const CaseRecord& c = cases[i];
    out += std::to_string(i) + ',' + csv_field(c.name) + ',' + csv_field(c.anchor) + ',' + json_field(c.inputs) + ',' +
           json_field(c.computed) + ',' + json_field(c.reference) + ',' + number(c.error) + ',' + number(c.tolerance) +
           ',' + (c.pass ? "true" : "false") + '\n';
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary);
  if (!f) throw ConfigError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw ConfigError("failed writing '" + path + "'");
}

}  // namespace sbolab::cli
