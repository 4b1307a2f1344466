#include "lambdatail/estimate.hpp"

#include "lambdatail/distribution.hpp"
#include "lambdatail/errors.hpp"
#include "lambdatail/io.hpp"
#include "lambdatail/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace lambdatail {

using io::format_g;

TailIndexEstimate lambda_tail_index(const LambdaCurve& curve) {
    if (curve.points.empty()) throw DegenerateSampleError("lambda_tail_index: empty curve");
    double sum = 0.0;
    for (const auto& pt : curve.points) sum += pt.lambda;
    const double lambda_bar = sum / static_cast<double>(curve.points.size());
    if (!(lambda_bar > 0.0)) {
        throw DegenerateSampleError("lambda_tail_index: lambda_bar = 0 (sample has no spread)");
    }
    TailIndexEstimate e;
    e.lambda_bar = lambda_bar;
    e.alpha_hat = 1.0 / lambda_bar;
    e.n = curve.n;
    e.m = curve.m;
    e.suspect_infinite_mean = e.alpha_hat <= 1.0;
    return e;
}

TailIndexEstimate lambda_tail_index(const SortedSample& s) {
    return lambda_tail_index(lambda_curve(s));
}

HillEstimate hill_estimator(const SortedSample& s, std::size_t k) {
    const std::size_t n = s.size();
    if (k < 1 || k >= n) {
        throw DomainError("hill_estimator: k must satisfy 1 <= k <= n-1 (k = " + std::to_string(k) +
                          ", n = " + std::to_string(n) + ")");
    }
    const double threshold = s[n - k - 1];
    if (s.max() == threshold) {
        throw DegenerateSampleError("hill_estimator: top " + std::to_string(k + 1) + " order statistics are equal");
    }
    double sum = 0.0;
    for (std::size_t i = n - k; i < n; ++i) sum += std::log(s[i] / threshold);
    HillEstimate h;
    h.k = k;
    h.gamma_hat = sum / static_cast<double>(k);
    h.alpha_hat = 1.0 / h.gamma_hat;
    return h;
}

double gof_statistic(const LambdaCurve& curve, double lambda_bar) {
    double d = 0.0;
    for (const auto& pt : curve.points) d = std::max(d, std::abs(pt.lambda - lambda_bar));
    return d;
}

GofResult pareto_gof_test(const SortedSample& s, std::size_t n_boot, Seed seed, std::size_t threads) {
    if (n_boot < kMinBootstrap) {
        throw DomainError("pareto_gof_test: n_boot must be >= " + std::to_string(kMinBootstrap));
    }
    const LambdaCurve curve = lambda_curve(s);
    const TailIndexEstimate fit = lambda_tail_index(curve);

    GofResult out;
    out.statistic = gof_statistic(curve, fit.lambda_bar);
    out.n_boot = n_boot;
    out.alpha_hat_null = fit.alpha_hat;
    out.scale_null = s.min();

    const DistributionSpec null_model = Pareto(out.alpha_hat_null, out.scale_null);
    const std::size_t n = s.size();
    constexpr double kFailed = std::numeric_limits<double>::infinity();
    std::vector<double> boot(n_boot);
    parallel_for(n_boot, threads, [&](std::size_t b) {
        try {
            const SortedSample draw(sample(null_model, n, derive_seed(seed, b)));
            const LambdaCurve c = lambda_curve(draw);
            boot[b] = gof_statistic(c, lambda_tail_index(c).lambda_bar);
        } catch (const NumericDegeneracyError&) {
            boot[b] = kFailed;
        } catch (const DataError&) {
            boot[b] = kFailed;
        }
    });

    std::size_t exceed = 0;
    for (const double d : boot) {
        if (d == kFailed) ++out.boot_failures;
        if (d >= out.statistic) ++exceed;
    }
    out.p_value = static_cast<double>(1 + exceed) / static_cast<double>(n_boot + 1);
    return out;
}

std::string to_record(const TailIndexEstimate& e, int digits) {
    return "estimator=lambda\n"
           "alpha_hat=" + format_g(e.alpha_hat, digits) + "\n"
           "lambda_bar=" + format_g(e.lambda_bar, digits) + "\n"
           "n=" + std::to_string(e.n) + "\n"
           "m=" + std::to_string(e.m) + "\n"
           "suspect_infinite_mean=" + (e.suspect_infinite_mean ? "true" : "false") + "\n";
}

std::string to_record(const HillEstimate& h, int digits) {
    return "estimator=hill\n"
           "k=" + std::to_string(h.k) + "\n"
           "gamma_hat=" + format_g(h.gamma_hat, digits) + "\n"
           "alpha_hat=" + format_g(h.alpha_hat, digits) + "\n";
}

std::string to_record(const GofResult& g, int digits) {
    return "test=pareto_gof\n"
           "method=" + g.method + "\n"
           "statistic=" + format_g(g.statistic, digits) + "\n"
           "p_value=" + format_g(g.p_value, digits) + "\n"
           "n_boot=" + std::to_string(g.n_boot) + "\n"
           "boot_failures=" + std::to_string(g.boot_failures) + "\n"
           "alpha_hat_null=" + format_g(g.alpha_hat_null, digits) + "\n"
           "scale_null=" + format_g(g.scale_null, digits) + "\n";
}

std::string estimate_csv_header() {
    return "n,m,lambda_bar,alpha_hat,suspect_infinite_mean,hill_k,hill_gamma_hat,hill_alpha_hat";
}

std::string to_csv_row(const TailIndexEstimate& e, const std::optional<HillEstimate>& hill) {
    std::string row = std::to_string(e.n) + "," + std::to_string(e.m) + "," + format_g(e.lambda_bar) + "," +
                      format_g(e.alpha_hat) + "," + (e.suspect_infinite_mean ? "1" : "0");
    if (hill) {
        row += "," + std::to_string(hill->k) + "," + format_g(hill->gamma_hat) + "," + format_g(hill->alpha_hat);
    } else {
        row += ",,,";
    }
    return row;
}

std::string gof_csv_header() {
    return "statistic,p_value,n_boot,boot_failures,alpha_hat_null,scale_null,method";
}

std::string to_csv_row(const GofResult& g) {
    return format_g(g.statistic) + "," + format_g(g.p_value) + "," + std::to_string(g.n_boot) + "," +
           std::to_string(g.boot_failures) + "," + format_g(g.alpha_hat_null) + "," + format_g(g.scale_null) +
           ",\"" + g.method + "\"";
}

}  // namespace lambdatail
