#pragma once

#include "run_config.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace jastrow1d::cli {

enum ExitCode { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

struct CompareReport {
    std::optional<double> e_trial_min;
    std::optional<double> alpha_star;
    std::optional<double> e_ci;
    std::optional<double> gap;
    std::optional<double> delta;
    std::optional<double> delta_over_gap;
    std::optional<double> quadrature_delta; // |E(q) - E(q/2)| at alpha_star
    std::optional<double> ci_m_delta;       // E_ci(M) - E_ci(M - 3)
    bool partial = false;
    std::vector<std::string> errors;
};

int cmd_twobody(const RunConfig &config, std::ostream &out);
int cmd_scan(const RunConfig &config, std::ostream &out);
int cmd_minimize(const RunConfig &config, std::ostream &out);
int cmd_ci(const RunConfig &config, std::ostream &out);
int cmd_compare(const RunConfig &config, std::ostream &out);

/// Full command line (argv[0] included). Writes results to `out` or to the
/// configured output file, diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace jastrow1d::cli
