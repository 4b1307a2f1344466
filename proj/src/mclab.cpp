#include "lambdatail/mclab.hpp"

#include "lambdatail/errors.hpp"
#include "lambdatail/estimate.hpp"
#include "lambdatail/io.hpp"
#include "lambdatail/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

namespace lambdatail {

using io::format_g;

namespace {

struct LevelEstimates {
    std::optional<double> lambda_alpha;
    std::optional<double> hill_alpha;
};

std::optional<SortedSample> truncated_or_failure(const SortedSample& s, double q) {
    try {
        SortedSample t = truncate_at_quantile(s, q);
        if (t.size() < kMinTruncatedSize) return std::nullopt;
        return t;
    } catch (const DataError&) {
        return std::nullopt;
    }
}

SortedSample draw(const ExperimentConfig& cfg, std::size_t rep) {
    return SortedSample(sample(cfg.dist, cfg.n, derive_seed(cfg.seed, rep)));
}

ReportRow summarize(const std::string& estimator, double level, const std::vector<std::optional<double>>& values,
                    const std::optional<double>& truth) {
    ReportRow row;
    row.estimator = estimator;
    row.level = level;
    double sum = 0.0;
    for (const auto& v : values) {
        if (v) {
            ++row.successes;
            sum += *v;
        } else {
            ++row.failures;
        }
    }
    if (row.successes == 0) {
        row.mean = std::numeric_limits<double>::quiet_NaN();
        row.sd = std::numeric_limits<double>::quiet_NaN();
        return row;
    }
    const double count = static_cast<double>(row.successes);
    row.mean = sum / count;
    double squares = 0.0;
    double errors = 0.0;
    for (const auto& v : values) {
        if (!v) continue;
        squares += (*v - row.mean) * (*v - row.mean);
        if (truth) errors += (*v - *truth) * (*v - *truth);
    }
    row.sd = std::sqrt(squares / count);
    if (truth) {
        row.bias = row.mean - *truth;
        row.rmse = std::sqrt(errors / count);
    }
    return row;
}

ExperimentReport run_levels(const ExperimentConfig& cfg, const std::vector<double>& levels) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();

    std::vector<std::vector<LevelEstimates>> results(cfg.reps, std::vector<LevelEstimates>(levels.size()));
    parallel_for(cfg.reps, cfg.threads, [&](std::size_t rep) {
        const SortedSample full = draw(cfg, rep);
        for (std::size_t l = 0; l < levels.size(); ++l) {
            const auto sub = truncated_or_failure(full, levels[l]);
            if (!sub) continue;
            LevelEstimates& out = results[rep][l];
            try {
                out.lambda_alpha = lambda_tail_index(*sub).alpha_hat;
            } catch (const NumericDegeneracyError&) {
            }
            if (cfg.hill_k && *cfg.hill_k < sub->size()) {
                try {
                    out.hill_alpha = hill_estimator(*sub, *cfg.hill_k).alpha_hat;
                } catch (const NumericDegeneracyError&) {
                }
            }
        }
    });

    ExperimentReport report;
    report.dist = to_string(cfg.dist);
    report.n = cfg.n;
    report.reps = cfg.reps;
    report.seed = cfg.seed;
    report.hill_k = cfg.hill_k;
    report.true_alpha = tail_index(cfg.dist);

    std::vector<std::string> estimators{"lambda"};
    if (cfg.hill_k) estimators.emplace_back("hill");
    for (const auto& name : estimators) {
        std::optional<double> first_mean;
        for (std::size_t l = 0; l < levels.size(); ++l) {
            std::vector<std::optional<double>> values(cfg.reps);
            for (std::size_t rep = 0; rep < cfg.reps; ++rep) {
                values[rep] = name == "lambda" ? results[rep][l].lambda_alpha : results[rep][l].hill_alpha;
            }
            ReportRow row = summarize(name, levels[l], values, report.true_alpha);
            if (l == 0 && row.successes > 0) first_mean = row.mean;
            if (first_mean && row.successes > 0) row.delta_first_level = row.mean - *first_mean;
            report.rows.push_back(std::move(row));
        }
    }

    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string csv_optional(const std::optional<double>& v) {
    return v && !std::isnan(*v) ? format_g(*v) : "NA";
}

}  // namespace

void ExperimentConfig::validate() const {
    if (reps < 1) throw DomainError("experiment: reps must be >= 1");
    if (n < 2) throw DomainError("experiment: n must be >= 2");
    if (truncation_quantiles.empty()) throw DomainError("experiment: truncation list is empty");
    for (std::size_t i = 0; i < truncation_quantiles.size(); ++i) {
        const double q = truncation_quantiles[i];
        if (!(q >= 0.0 && q < 1.0)) throw DomainError("experiment: truncation quantiles must lie in [0,1)");
        if (i > 0 && !(q > truncation_quantiles[i - 1])) {
            throw DomainError("experiment: truncation quantiles must be strictly ascending");
        }
    }
    if (hill_k && *hill_k < 1) throw DomainError("experiment: hill k must be >= 1");
}

SortedSample truncate_at_quantile(const SortedSample& s, double q) {
    if (!(q >= 0.0 && q < 1.0)) throw DomainError("truncate_at_quantile: q must lie in [0,1)");
    if (q == 0.0) return s;
    const std::size_t n = s.size();
    const double dn = static_cast<double>(n);
    // smallest k with k/n >= q
    auto k = static_cast<std::size_t>(std::ceil(q * dn));
    while (k > 1 && static_cast<double>(k - 1) / dn >= q) --k;
    while (static_cast<double>(k) / dn < q) ++k;
    return s.above(s[k - 1]);
}

std::vector<double> ensemble_grid() {
    std::vector<double> grid(kGridPoints);
    for (std::size_t k = 1; k <= kGridPoints; ++k) grid[k - 1] = static_cast<double>(k) / 100.0;
    return grid;
}

double curve_at_grid(const LambdaCurve& curve, std::size_t k) {
    const std::size_t i = std::clamp<std::size_t>(k * curve.n / 100, 1, curve.m);
    return curve.points[i - 1].lambda;
}

CurveEnsemble replicate_curves(const ExperimentConfig& cfg) {
    cfg.validate();
    if (!has_finite_mean(cfg.dist)) {
        throw InfiniteMeanError("replicate_curves: " + to_string(cfg.dist) + " has infinite mean");
    }
    const auto& levels = cfg.truncation_quantiles;

    std::vector<std::vector<std::optional<LambdaCurve>>> curves(
        cfg.reps, std::vector<std::optional<LambdaCurve>>(levels.size()));
    parallel_for(cfg.reps, cfg.threads, [&](std::size_t rep) {
        const SortedSample full = draw(cfg, rep);
        for (std::size_t l = 0; l < levels.size(); ++l) {
            const auto sub = truncated_or_failure(full, levels[l]);
            if (!sub) continue;
            try {
                curves[rep][l] = lambda_curve(*sub);
            } catch (const NumericDegeneracyError&) {
            }
        }
    });

    CurveEnsemble ensemble;
    ensemble.p_grid = ensemble_grid();
    if (const auto alpha = tail_index(cfg.dist)) ensemble.reference = 1.0 / *alpha;
    for (std::size_t l = 0; l < levels.size(); ++l) {
        CurveLevel level;
        level.quantile = levels[l];
        level.mean_lambda.assign(kGridPoints, 0.0);
        for (std::size_t rep = 0; rep < cfg.reps; ++rep) {
            const auto& c = curves[rep][l];
            if (!c) {
                ++level.failures;
                continue;
            }
            ++level.successes;
            for (std::size_t k = 1; k <= kGridPoints; ++k) level.mean_lambda[k - 1] += curve_at_grid(*c, k);
            if (cfg.retain_curves) level.curves.push_back(*c);
        }
        for (double& v : level.mean_lambda) {
            v = level.successes ? v / static_cast<double>(level.successes) : std::numeric_limits<double>::quiet_NaN();
        }
        ensemble.levels.push_back(std::move(level));
    }
    return ensemble;
}

ExperimentReport estimator_benchmark(const ExperimentConfig& cfg) {
    return run_levels(cfg, {0.0});
}

ExperimentReport truncation_sweep(const ExperimentConfig& cfg) {
    return run_levels(cfg, cfg.truncation_quantiles);
}

const ReportRow& ExperimentReport::row(const std::string& estimator, double level) const {
    for (const auto& r : rows) {
        if (r.estimator == estimator && r.level == level) return r;
    }
    throw DomainError("report has no row for " + estimator + " at level " + format_g(level, 6));
}

double ExperimentReport::max_pairwise_mean_difference(const std::string& estimator) const {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& r : rows) {
        if (r.estimator != estimator || r.successes == 0) continue;
        lo = std::min(lo, r.mean);
        hi = std::max(hi, r.mean);
    }
    return hi >= lo ? hi - lo : 0.0;
}

std::string report_csv_header() {
    return "dist,n,reps,seed,estimator,hill_k,level,successes,failures,true_alpha,mean,bias,sd,rmse,delta_first_level";
}

std::string to_csv(const ExperimentReport& report) {
    std::ostringstream out;
    out << report_csv_header() << '\n';
    for (const auto& r : report.rows) {
        out << '"' << report.dist << "\"," << report.n << ',' << report.reps << ',' << report.seed.value << ',' << r.estimator
            << ',' << (r.estimator == "hill" && report.hill_k ? std::to_string(*report.hill_k) : "NA") << ','
            << format_g(r.level) << ',' << r.successes << ',' << r.failures << ',' << csv_optional(report.true_alpha)
            << ',' << csv_optional(r.mean) << ',' << csv_optional(r.bias) << ',' << csv_optional(r.sd) << ','
            << csv_optional(r.rmse) << ',' << csv_optional(r.delta_first_level) << '\n';
    }
    return out.str();
}

std::string ensemble_csv_header() {
    return "level,p,mean_lambda";
}

std::string to_csv(const CurveEnsemble& ensemble) {
    std::ostringstream out;
    out << ensemble_csv_header() << '\n';
    for (const auto& level : ensemble.levels) {
        for (std::size_t k = 0; k < ensemble.p_grid.size(); ++k) {
            out << format_g(level.quantile) << ',' << format_g(ensemble.p_grid[k]) << ','
                << csv_optional(level.mean_lambda[k]) << '\n';
        }
    }
    return out.str();
}

}  // namespace lambdatail
