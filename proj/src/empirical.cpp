#include "lambdatail/empirical.hpp"

#include "lambdatail/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lambdatail {

namespace {

constexpr double kLorenzCeiling = 1.0 - 1e-15;

// Largest i in [0, n] with i/n <= p, using the same division that produces p_i.
std::size_t lorenz_index(double p, std::size_t n) {
    const double dn = static_cast<double>(n);
    auto i = static_cast<std::size_t>(std::clamp(std::floor(p * dn), 0.0, dn));
    while (i < n && static_cast<double>(i + 1) / dn <= p) ++i;
    while (i > 0 && static_cast<double>(i) / dn > p) --i;
    return i;
}

}  // namespace

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) {
        throw DataError("sample needs at least 2 observations, got " + std::to_string(values_.size()));
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const double v = values_[i];
        if (!std::isfinite(v)) throw DataError("observation " + std::to_string(i + 1) + " is not finite");
        if (!(v > 0.0)) {
            throw DataError("observation " + std::to_string(i + 1) + " is not positive (" + std::to_string(v) + ")");
        }
    }
}

SortedSample::SortedSample(const Sample& sample) : ordered_(sample.values().begin(), sample.values().end()) {
    init();
}

SortedSample::SortedSample(std::vector<double> values) : SortedSample(Sample(std::move(values))) {}

void SortedSample::init() {
    std::sort(ordered_.begin(), ordered_.end());
    prefix_.resize(ordered_.size());
    double running = 0.0;
    for (std::size_t i = 0; i < ordered_.size(); ++i) {
        running += ordered_[i];
        prefix_[i] = running;
    }
}

SortedSample SortedSample::above(double threshold) const {
    const auto first = std::upper_bound(ordered_.begin(), ordered_.end(), threshold);
    return SortedSample(std::vector<double>(first, ordered_.end()));
}

SortedSample SortedSample::scaled(double c) const {
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("scaled: factor must be finite and > 0");
    std::vector<double> out(ordered_);
    for (double& v : out) v *= c;
    return SortedSample(std::move(out));
}

std::size_t lambda_cutoff(std::size_t n) {
    std::size_t root = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (root * root > n) --root;
    while ((root + 1) * (root + 1) <= n) ++root;
    return n - root;
}

double ecdf(const SortedSample& s, double x) {
    const auto it = std::upper_bound(s.ordered().begin(), s.ordered().end(), x);
    return static_cast<double>(it - s.ordered().begin()) / static_cast<double>(s.size());
}

double empirical_q(const SortedSample& s, double x) {
    const auto it = std::upper_bound(s.ordered().begin(), s.ordered().end(), x);
    return s.prefix_sum(static_cast<std::size_t>(it - s.ordered().begin())) / s.total();
}

double empirical_lorenz(const SortedSample& s, double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("empirical_lorenz: p must lie in (0,1)");
    return s.prefix_sum(lorenz_index(p, s.size())) / s.total();
}

LambdaCurve lambda_curve(const SortedSample& s) {
    const std::size_t n = s.size();
    LambdaCurve curve;
    curve.n = n;
    curve.m = lambda_cutoff(n);
    curve.points.reserve(curve.m);

    const double dn = static_cast<double>(n);
    const double total = s.total();
    const bool flat = s.all_equal();
    for (std::size_t i = 1; i <= curve.m; ++i) {
        const double p = static_cast<double>(i) / dn;
        if (flat) {
            curve.points.push_back({p, 0.0});
            continue;
        }
        const double lorenz = s.prefix_sum(i) / total;
        if (lorenz >= kLorenzCeiling) {
            throw DegenerateCurveError("lambda_curve: L_n(p) reaches 1 at p = " + std::to_string(i) + "/" +
                                       std::to_string(n));
        }
        const double lambda = 1.0 - std::log1p(-lorenz) / std::log1p(-p);
        curve.points.push_back({p, std::clamp(lambda, 0.0, 1.0)});
    }
    return curve;
}

}  // namespace lambdatail
