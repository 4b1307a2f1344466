#pragma once

#include "lambdatail/distribution.hpp"
#include "lambdatail/empirical.hpp"
#include "lambdatail/random.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lambdatail {

struct ExperimentConfig {
    DistributionSpec dist = Pareto(2.0, 1.0);
    std::size_t n = 500;
    std::size_t reps = 100;
    // Empirical quantile levels; each replication drops values <= F_n^-1(q).
    std::vector<double> truncation_quantiles = {0.0, 0.25, 0.5, 0.75};
    Seed seed{};
    std::optional<std::size_t> hill_k;
    // Worker threads (0 = hardware). Never changes results.
    std::size_t threads = 1;
    // Keep every per-replication curve in the ensemble.
    bool retain_curves = false;

    // Throws DomainError on reps == 0, n < 2, or a truncation list that is not
    // ascending within [0, 1).
    void validate() const;
};

// Subsample strictly above the empirical q-quantile X_(ceil(q n)); q = 0 keeps
// everything. Throws DataError if fewer than 2 values remain.
SortedSample truncate_at_quantile(const SortedSample& s, double q);

// Truncated subsamples smaller than this are recorded as failed replications.
inline constexpr std::size_t kMinTruncatedSize = 4;

// Fixed aggregation grid p = k/100, k = 1..99.
inline constexpr std::size_t kGridPoints = 99;
std::vector<double> ensemble_grid();

// Step-function reading of a curve at p = k/100: the value at the largest
// p_i <= p, held at the first point below p_1 and at the last beyond p_m.
double curve_at_grid(const LambdaCurve& curve, std::size_t k);

struct CurveLevel {
    double quantile = 0.0;
    std::vector<double> mean_lambda;  // on ensemble_grid()
    std::size_t successes = 0;
    std::size_t failures = 0;
    std::vector<LambdaCurve> curves;  // retained, replication order, failures omitted

    friend bool operator==(const CurveLevel&, const CurveLevel&) = default;
};

struct CurveEnsemble {
    std::vector<double> p_grid;
    std::vector<CurveLevel> levels;
    std::optional<double> reference;  // 1/alpha when the family has a tail index

    friend bool operator==(const CurveEnsemble&, const CurveEnsemble&) = default;
};

struct ReportRow {
    std::string estimator;  // "lambda" or "hill"
    double level = 0.0;
    std::size_t successes = 0;
    std::size_t failures = 0;
    double mean = 0.0;
    double sd = 0.0;  // population (divide by successes), so rmse^2 = bias^2 + sd^2
    std::optional<double> bias;
    std::optional<double> rmse;
    // mean - mean at the first level for the same estimator
    std::optional<double> delta_first_level;

    friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct ExperimentReport {
    std::string dist;
    std::size_t n = 0;
    std::size_t reps = 0;
    Seed seed{};
    std::optional<std::size_t> hill_k;
    std::optional<double> true_alpha;
    std::vector<ReportRow> rows;
    double wall_seconds = 0.0;  // not part of the CSV

    const ReportRow& row(const std::string& estimator, double level) const;
    // Largest |mean_a - mean_b| over the estimator's levels with successes.
    double max_pairwise_mean_difference(const std::string& estimator) const;
};

// Figure-style ensemble of lambda-hat curves per truncation level.
CurveEnsemble replicate_curves(const ExperimentConfig& cfg);

// Untruncated replications: lambda estimator, plus Hill when hill_k is set.
ExperimentReport estimator_benchmark(const ExperimentConfig& cfg);

// Same replications as estimator_benchmark, re-estimated at each truncation level.
ExperimentReport truncation_sweep(const ExperimentConfig& cfg);

std::string report_csv_header();
std::string to_csv(const ExperimentReport& report);

// Long format: level,p,mean_lambda
std::string ensemble_csv_header();
std::string to_csv(const CurveEnsemble& ensemble);

}  // namespace lambdatail
