#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stein/rational.hpp"

namespace stein {

// Command-line front end, exposed as a library so the dispatch logic is
// directly testable. Exit codes: 0 success, 1 usage/input error,
// 2 verification failure (nonzero residual or a Mellin mismatch).
struct CommandOptions {
    bool json = false;
    bool explain = false;
    long kmax = 12;
    int order = 2;
    int degree = 1;
    std::optional<long> rows;
    std::optional<std::vector<Rational>> seeds;
    std::optional<std::vector<Rational>> probes;
    std::optional<std::pair<int, int>> g_orders; // override of the (m, n) selection
};

struct CommandResult {
    int exit_code = 0;
    std::string output;
};

CommandResult run_operator(const std::string& expr, const CommandOptions& opt);
CommandResult run_verify(const std::string& expr, const CommandOptions& opt);
CommandResult run_moments(const std::string& expr, const CommandOptions& opt);
CommandResult run_density_ode(const std::string& expr, const CommandOptions& opt);
CommandResult run_g_density(const std::string& expr, const CommandOptions& opt);
CommandResult run_mellin(const std::string& expr, const CommandOptions& opt);
CommandResult run_minimal_search(const std::string& expr, const CommandOptions& opt);

} // namespace stein
