#pragma once

#include <string>
#include <vector>

#include "cli/config.hpp"
#include "cli/report.hpp"
#include "sbolab/quadrature.hpp"

namespace sbolab::cli {

const std::vector<std::string>& suite_names();

/// Runs config.suite. Throws ConfigError for options the suite cannot honour;
/// BudgetExceeded propagates once `budget` is spent.
Report run_suite(const RunConfig& config, EvaluationBudget& budget);

}  // namespace sbolab::cli
