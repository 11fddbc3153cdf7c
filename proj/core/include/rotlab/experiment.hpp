#pragma once

/**
 * @file experiment.hpp
 * @brief Census sweeps over size ladders, scaling-exponent fits, and the
 *        reference curves the reports are plotted against.
 *
 * Reference curves carry fitted constants only; none of the asymptotic
 * bounds is asserted, the reports are for reading growth off desk-scale
 * data.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rotlab/census.hpp"
#include "rotlab/generators.hpp"

namespace rotlab {

struct ExperimentRow {
    long long s = 0;
    long long x = 0;
    long long K = 0;
    std::map<long long, long long> nk;
    std::map<long long, long long> ngeq;
    long long joints = 0;
    long long flats = 0;
    long long chart_excluded = 0;
    std::optional<long long> incidence_count;
    long long wall_ms = 0;
};

/// N_{>=k} read from a row (0 when no multiplicity reaches k).
long long n_geq_at(const ExperimentRow& row, long long k);

struct SlopeFit {
    double slope = 0;
    double intercept = 0;
    double residual = 0; // sum of squared log-residuals
    int points = 0;
};

/// Least squares of log y against log x; requires every y > 0.
SlopeFit fit_loglog(const std::vector<std::pair<double, double>>& xy);

struct ExperimentReport {
    FamilySpec base;
    std::vector<int> sizes;
    int kmax = 0;
    std::vector<ExperimentRow> rows; // sorted by s
    /// log N_{>=3} vs log s; present when at least three sizes have
    /// N_{>=3} > 0.
    std::optional<SlopeFit> ngeq3_fit;
    // Fitted constants for N_{>=k} ~ c * f(s, k) over all report cells.
    double conjecture_constant = 0;  // f = s^3 / k^2
    double corollary52_constant = 0; // f = s^3 / k^{12/7}
    double st_constant = 0;          // f = s^4 / k^3
};

struct ExperimentOptions {
    int kmax = 0;        // 0: up to the largest observed multiplicity
    bool timings = true; // false: wall_ms column pinned to 0 for byte-stable output
    bool with_incidences = false;
    int workers = 0;
};

ExperimentReport run_experiment(const FamilySpec& base, const std::vector<int>& sizes,
                                const ExperimentOptions& options = {});

/// Header s,x,K,k,N_k,N_geq_k,joints,flats,chart_excluded,wall_ms and one
/// row per (s, k).
std::string experiment_to_csv_text(const ExperimentReport& report);
std::string experiment_to_json_text(const ExperimentReport& report);

/// Floating-point census fast path: N_k table with eps-tolerant rotation
/// dedup. Harness-only; never feeds exact predicates. Exact and float
/// tables are expected to agree on the tested families, and callers treat
/// any discrepancy as an error.
std::map<long long, long long> float_census_nk(const PointSet& s, double eps = 1e-9);

} // namespace rotlab
