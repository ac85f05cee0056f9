#include "cli/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>

#include "sbolab/errors.hpp"

namespace sbolab::cli {
namespace {

double parse_real(std::string_view text) {
  if (text.empty()) throw ConfigError("empty number");
  if (text.find('/') != std::string_view::npos) return parse_rational(text).get_d();
  std::string_view t = text.front() == '+' ? text.substr(1) : text;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw ConfigError("malformed number '" + std::string(text) + "'");
  }
  return v;
}

int parse_int(std::string_view text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("malformed integer '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  if (text.empty()) throw ConfigError("empty parameter literal");
  if (text.back() != 'i') {
    try {
      Rational q = parse_rational(text);
      return {Complex(q.get_d(), 0.0), q};
    } catch (const ConfigError&) {
      return {Complex(parse_real(text), 0.0), std::nullopt};
    }
  }
  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  double re = 0.0, im = 0.0;
  auto imag_part = [](std::string_view s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real(s);
  };
  if (split == std::string_view::npos) {
    im = imag_part(body);
  } else {
    re = parse_real(body.substr(0, split));
    im = imag_part(body.substr(split));
  }
  return {Complex(re, im), std::nullopt};
}

std::string Scalar::to_string() const {
  if (exact) return sbolab::to_string(*exact);
  return format_complex(value);
}

IntRange IntRange::parse(std::string_view text) {
  std::size_t dots = text.find("..");
  IntRange r;
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, dots));
    r.hi = parse_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw ConfigError("empty range '" + std::string(text) + "'");
  return r;
}

std::string IntRange::to_string() const {
  return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
}

std::vector<double> parse_vector(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_real(part));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void RunConfig::validate() const {
  if (n && n->lo < 2) throw ConfigError("--n must be at least 2");
  if (l && l->lo < 0) throw ConfigError("--l must be non-negative");
  if (samples && *samples == 0) throw ConfigError("--samples must be positive");
  if (grid && *grid == 0) throw ConfigError("--grid must be positive");
  if (tolerance && !(*tolerance > 0.0)) throw ConfigError("--tol must be positive");
  if (budget == 0) throw ConfigError("--budget must be positive");
  for (const auto& s : lambdas) (void)Scalar::parse(s);
  for (const auto& s : nus) (void)Scalar::parse(s);
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["n"] = n ? nlohmann::json(n->to_string()) : nlohmann::json(nullptr);
  j["l"] = l ? nlohmann::json(l->to_string()) : nlohmann::json(nullptr);
  j["lambda"] = lambdas;
  j["nu"] = nus;
  j["samples"] = samples ? nlohmann::json(*samples) : nlohmann::json(nullptr);
  j["grid"] = grid ? nlohmann::json(*grid) : nlohmann::json(nullptr);
  j["tolerance"] = tolerance ? nlohmann::json(*tolerance) : nlohmann::json(nullptr);
  j["budget"] = budget;
  j["seed"] = seed;
  if (suite == "covariance") {
    j["op"] = op;
    j["gen"] = generator;
  }
  if (suite == "fmethod") j["formal"] = formal;
  return j;
}

std::string resolve_output(const std::string& explicit_path, const std::string& stem) {
  if (!explicit_path.empty()) return explicit_path;
  const char* dir = std::getenv("SBOLAB_OUTPUT_DIR");
  std::filesystem::path base = (dir && *dir) ? std::filesystem::path(dir) : std::filesystem::path(".");
  return (base / stem).string();
}

std::string format_complex(Complex z) {
  char buf[96];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.15g", z.real());
  } else if (z.real() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.15gi", z.imag());
  } else {
    std::snprintf(buf, sizeof buf, "%.15g%+.15gi", z.real(), z.imag());
  }
  return buf;
}

nlohmann::json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

}  // namespace sbolab::cli
