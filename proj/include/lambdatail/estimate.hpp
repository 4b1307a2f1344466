#pragma once

#include "lambdatail/empirical.hpp"
#include "lambdatail/random.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace lambdatail {

struct TailIndexEstimate {
    double alpha_hat = 0.0;
    double lambda_bar = 0.0;
    std::size_t n = 0;
    std::size_t m = 0;
    // alpha_hat <= 1: the finite-mean premise of the curve fails.
    bool suspect_infinite_mean = false;

    friend bool operator==(const TailIndexEstimate&, const TailIndexEstimate&) = default;
};

struct HillEstimate {
    double gamma_hat = 0.0;
    double alpha_hat = 0.0;
    std::size_t k = 0;
};

// GoF statistic and its calibration are this library's construction; the
// `method` string travels with every serialized result.
struct GofResult {
    double statistic = 0.0;
    double p_value = 1.0;
    std::size_t n_boot = 0;
    double alpha_hat_null = 0.0;
    double scale_null = 0.0;
    std::size_t boot_failures = 0;
    std::string method = "max|lambda_i-lambda_bar|;parametric-bootstrap;null=pareto(alpha_hat,x_min)";
};

// alpha_hat = 1 / mean(lambda_hat_1..m). Throws DegenerateSampleError when
// lambda_bar == 0 (e.g. every value equal); curve errors propagate.
TailIndexEstimate lambda_tail_index(const SortedSample& s);
TailIndexEstimate lambda_tail_index(const LambdaCurve& curve);

// gamma_hat = (1/k) sum_{i=1..k} log(X_(n-i+1) / X_(n-k)). Requires 1 <= k <= n-1.
HillEstimate hill_estimator(const SortedSample& s, std::size_t k);

// D = max_i |lambda_hat_i - lambda_bar| over the curve.
double gof_statistic(const LambdaCurve& curve, double lambda_bar);

inline constexpr std::size_t kMinBootstrap = 99;

// Parametric bootstrap of D under Pareto(alpha_hat, X_(1)). Replicate b draws
// from derive_seed(seed, b); p = (1 + #{D*_b >= D}) / (n_boot + 1). A
// replicate whose curve is degenerate counts as D*_b >= D.
GofResult pareto_gof_test(const SortedSample& s, std::size_t n_boot, Seed seed, std::size_t threads = 1);

// "key=value" lines; reals printed with `digits` significant digits.
std::string to_record(const TailIndexEstimate& e, int digits = 17);
std::string to_record(const HillEstimate& h, int digits = 17);
std::string to_record(const GofResult& g, int digits = 17);

// CSV header/row pairs, 17 significant digits. Hill columns stay empty
// when no Hill estimate is supplied.
std::string estimate_csv_header();
std::string to_csv_row(const TailIndexEstimate& e, const std::optional<HillEstimate>& hill = std::nullopt);
std::string gof_csv_header();
std::string to_csv_row(const GofResult& g);

}  // namespace lambdatail
