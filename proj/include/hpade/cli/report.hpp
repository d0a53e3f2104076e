#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hpade/cli/system_file.hpp"

namespace hpade::cli {

struct RunOptions {
    std::optional<long> order;
    double tol = 1e-9;
    long grid = 4096;
    bool canonical = false;
};

struct SolveOutcome {
    Json report;
    /// Power: more than one solution up to scale. Trig and Chebyshev: not weakly normal.
    bool degenerate = false;
};

/// Series order used for a generator when neither the flags nor the file give one.
long default_order(long n, long m);

SolveOutcome solve_report(const SystemFile& sys, const MultiIndex& idx, const RunOptions& opts);

/// One row per multi-index of the box 0 <= n <= n_max, 0 <= m_j <= m_max.
Json scan_report(const SystemFile& sys, long n_max, long m_max, const RunOptions& opts);
std::string scan_csv(const Json& scan);

/// The Hermite-Jacobi part of a solve report.
Json check_hj_report(const SolveOutcome& solved);

struct EvalRequest {
    std::size_t j = 0;  // 0-based
    std::vector<Rational> variant;
    std::vector<std::string> points;
    long plot_points = 0;
};

struct EvalOutcome {
    Json table;
    std::string plot_csv;
};

/// Evaluates pi_j = P_j/Q from a solve report. Points are rationals, or for
/// trigonometric reports multiples of pi such as "pi/2" or "-3pi/4".
EvalOutcome eval_report(const Json& report, const EvalRequest& req);

Json families_report();

}  // namespace hpade::cli
