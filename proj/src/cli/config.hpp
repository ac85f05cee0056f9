#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sbolab/rational.hpp"

namespace sbolab::cli {

using Complex = std::complex<double>;

/// A parameter literal: exact when written as an integer, p/q or a terminating
/// decimal, complex when written as a, a+bi, a-bi or bi.
struct Scalar {
  Complex value;
  std::optional<Rational> exact;

  static Scalar parse(std::string_view text);
  std::string to_string() const;
};

/// "3" or "2..5" (inclusive).
struct IntRange {
  int lo = 0;
  int hi = 0;

  static IntRange parse(std::string_view text);
  std::string to_string() const;
};

std::vector<double> parse_vector(std::string_view text);

struct RunConfig {
  std::string suite;
  std::optional<IntRange> n;
  std::optional<IntRange> l;
  std::vector<std::string> lambdas;
  std::vector<std::string> nus;
  std::optional<std::size_t> samples;  // suite default when absent
  std::optional<std::size_t> grid;
  std::optional<double> tolerance;
  std::uint64_t budget = 1'000'000'000;
  std::uint64_t seed = 1;
  std::string op = "juhl";
  std::string generator = "all";
  bool formal = false;
  std::string out_path;
  std::optional<std::string> csv_path;

  /// Validates the ranges and counts; throws ConfigError.
  void validate() const;
  nlohmann::json to_json() const;
};

/// --out if given, else $SBOLAB_OUTPUT_DIR/<stem>, else ./<stem>.
std::string resolve_output(const std::string& explicit_path, const std::string& stem);

std::string format_complex(Complex z);
nlohmann::json complex_json(Complex z);

}  // namespace sbolab::cli
