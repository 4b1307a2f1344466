#include "lambdatail/distribution.hpp"

#include "lambdatail/errors.hpp"
#include "lambdatail/quadrature.hpp"

#include <boost/math/special_functions/erf.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace lambdatail {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kQuadTol = 1e-10;
constexpr double kSurvivalFloor = 1e-15;

void require_probability(double p, const char* where) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError(std::string(where) + ": probability must lie in (0,1), got " + std::to_string(p));
    }
}

void require_not_nan(double x, const char* where) {
    if (std::isnan(x)) throw DomainError(std::string(where) + ": argument is NaN");
}

void require_finite_mean(const DistributionSpec& spec, const char* where) {
    if (!has_finite_mean(spec)) {
        throw InfiniteMeanError(std::string(where) + ": " + to_string(spec) + " has infinite mean (alpha <= 1)");
    }
}

// log f(e^u) for the families without a closed-form incomplete moment.
double log_density_at_log(const DistributionSpec& spec, double u) {
    return std::visit(overloaded{
                          [u](const Frechet& d) {
                              const double a = d.alpha();
                              return std::log(a) - (a + 1.0) * u - std::exp(-a * u);
                          },
                          [u](const LogNormal& d) {
                              const double z = (u - d.mu()) / d.sigma();
                              return -u - std::log(d.sigma()) - 0.5 * std::log(2.0 * std::numbers::pi) - 0.5 * z * z;
                          },
                          [](const Pareto&) -> double { throw std::logic_error("Pareto moments are closed form"); },
                      },
                      spec);
}

// Integrand of the partial mean after t = e^u: t * f(t) * dt = e^{2u} f(e^u) du.
quad::Integrand partial_mean_integrand(const DistributionSpec& spec) {
    return [spec](double u) { return std::exp(2.0 * u + log_density_at_log(spec, u)); };
}

struct PartialMeans {
    double lower;
    double upper;
};

// Both partial means at log x. The range is split at the log-median so each
// semi-infinite piece starts next to the bulk of the mass.
PartialMeans partial_means(const DistributionSpec& spec, double log_x, double tol) {
    const auto f = partial_mean_integrand(spec);
    const double c = std::log(quantile(spec, 0.5));
    const quad::Options opts{.abs_tol = tol};
    if (log_x <= c) {
        const double lower = quad::integrate_lower(f, log_x, opts).value;
        const double upper = quad::integrate(f, log_x, c, opts).value + quad::integrate_upper(f, c, opts).value;
        return {lower, upper};
    }
    const double lower = quad::integrate_lower(f, c, opts).value + quad::integrate(f, c, log_x, opts).value;
    const double upper = quad::integrate_upper(f, log_x, opts).value;
    return {lower, upper};
}

double parse_number(std::string_view token, std::string_view whole) {
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    double value = 0.0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    if (!token.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last) {
        throw std::invalid_argument("distribution '" + std::string(whole) + "': cannot parse number '" +
                                    std::string(token) + "'");
    }
    return value;
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

Pareto::Pareto(double alpha, double x0) : alpha_(alpha), x0_(x0) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("Pareto: alpha must be finite and > 0");
    if (!(x0 > 0.0) || !std::isfinite(x0)) throw DomainError("Pareto: x0 must be finite and > 0");
}

Frechet::Frechet(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("Frechet: alpha must be finite and > 0");
}

LogNormal::LogNormal(double mu, double sigma) : mu_(mu), sigma_(sigma) {
    if (!std::isfinite(mu)) throw DomainError("LogNormal: mu must be finite");
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("LogNormal: sigma must be finite and > 0");
}

DistributionSpec parse_distribution(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("distribution '" + std::string(text) + "': expected FAMILY:PARAMS");
    }
    const std::string_view family = text.substr(0, colon);
    std::string_view rest = text.substr(colon + 1);

    std::vector<double> params;
    while (true) {
        const auto comma = rest.find(',');
        params.push_back(parse_number(rest.substr(0, comma), text));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }

    const auto expect = [&](std::size_t count) {
        if (params.size() != count) {
            throw std::invalid_argument("distribution '" + std::string(text) + "': " + std::string(family) +
                                        " takes " + std::to_string(count) + " parameter(s)");
        }
    };
    if (family == "pareto") {
        expect(2);
        return Pareto(params[0], params[1]);
    }
    if (family == "frechet") {
        expect(1);
        return Frechet(params[0]);
    }
    if (family == "lognormal") {
        expect(2);
        return LogNormal(params[0], params[1]);
    }
    throw std::invalid_argument("distribution '" + std::string(text) + "': unknown family '" +
                                std::string(family) + "'");
}

std::string to_string(const DistributionSpec& spec) {
    return std::visit(overloaded{
                          [](const Pareto& d) { return "pareto:" + format_g17(d.alpha()) + "," + format_g17(d.x0()); },
                          [](const Frechet& d) { return "frechet:" + format_g17(d.alpha()); },
                          [](const LogNormal& d) {
                              return "lognormal:" + format_g17(d.mu()) + "," + format_g17(d.sigma());
                          },
                      },
                      spec);
}

std::string family_name(const DistributionSpec& spec) {
    return std::visit(overloaded{
                          [](const Pareto&) { return std::string("pareto"); },
                          [](const Frechet&) { return std::string("frechet"); },
                          [](const LogNormal&) { return std::string("lognormal"); },
                      },
                      spec);
}

std::optional<double> tail_index(const DistributionSpec& spec) {
    return std::visit(overloaded{
                          [](const Pareto& d) -> std::optional<double> { return d.alpha(); },
                          [](const Frechet& d) -> std::optional<double> { return d.alpha(); },
                          [](const LogNormal&) -> std::optional<double> { return std::nullopt; },
                      },
                      spec);
}

bool has_finite_mean(const DistributionSpec& spec) {
    const auto alpha = tail_index(spec);
    return !alpha || *alpha > 1.0;
}

double cdf(const DistributionSpec& spec, double x) {
    require_not_nan(x, "cdf");
    return std::visit(overloaded{
                          [x](const Pareto& d) {
                              if (x <= d.x0()) return 0.0;
                              return -std::expm1(-d.alpha() * std::log(x / d.x0()));
                          },
                          [x](const Frechet& d) {
                              if (x <= 0.0) return 0.0;
                              return std::exp(-std::pow(x, -d.alpha()));
                          },
                          [x](const LogNormal& d) {
                              if (x <= 0.0) return 0.0;
                              const double z = (std::log(x) - d.mu()) / d.sigma();
                              return 0.5 * std::erfc(-z / std::numbers::sqrt2);
                          },
                      },
                      spec);
}

double survival(const DistributionSpec& spec, double x) {
    require_not_nan(x, "survival");
    return std::visit(overloaded{
                          [x](const Pareto& d) {
                              if (x <= d.x0()) return 1.0;
                              return std::pow(x / d.x0(), -d.alpha());
                          },
                          [x](const Frechet& d) {
                              if (x <= 0.0) return 1.0;
                              return -std::expm1(-std::pow(x, -d.alpha()));
                          },
                          [x](const LogNormal& d) {
                              if (x <= 0.0) return 1.0;
                              const double z = (std::log(x) - d.mu()) / d.sigma();
                              return 0.5 * std::erfc(z / std::numbers::sqrt2);
                          },
                      },
                      spec);
}

double pdf(const DistributionSpec& spec, double x) {
    require_not_nan(x, "pdf");
    return std::visit(overloaded{
                          [x](const Pareto& d) {
                              if (x < d.x0()) return 0.0;
                              return d.alpha() / d.x0() * std::pow(x / d.x0(), -d.alpha() - 1.0);
                          },
                          [x, &spec](const Frechet&) {
                              if (x <= 0.0) return 0.0;
                              return std::exp(log_density_at_log(spec, std::log(x)));
                          },
                          [x, &spec](const LogNormal&) {
                              if (x <= 0.0) return 0.0;
                              return std::exp(log_density_at_log(spec, std::log(x)));
                          },
                      },
                      spec);
}

double quantile(const DistributionSpec& spec, double p) {
    require_probability(p, "quantile");
    return std::visit(overloaded{
                          [p](const Pareto& d) { return d.x0() * std::exp(-std::log1p(-p) / d.alpha()); },
                          [p](const Frechet& d) { return std::pow(-std::log(p), -1.0 / d.alpha()); },
                          [p](const LogNormal& d) {
                              const double z = -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
                              return std::exp(d.mu() + d.sigma() * z);
                          },
                      },
                      spec);
}

std::vector<double> sample(const DistributionSpec& spec, std::size_t n, Seed seed) {
    if (n == 0) throw DomainError("sample: n must be >= 1");
    UniformStream uniform(seed);
    std::vector<double> out(n);
    for (double& v : out) v = quantile(spec, uniform());
    return out;
}

double mean(const DistributionSpec& spec) {
    require_finite_mean(spec, "mean");
    return std::visit(overloaded{
                          [](const Pareto& d) { return d.alpha() * d.x0() / (d.alpha() - 1.0); },
                          [](const Frechet& d) { return std::tgamma(1.0 - 1.0 / d.alpha()); },
                          [](const LogNormal& d) { return std::exp(d.mu() + 0.5 * d.sigma() * d.sigma()); },
                      },
                      spec);
}

double incomplete_first_moment(const DistributionSpec& spec, double x) {
    require_not_nan(x, "incomplete_first_moment");
    require_finite_mean(spec, "incomplete_first_moment");
    if (const auto* p = std::get_if<Pareto>(&spec)) {
        if (x <= p->x0()) return 0.0;
        return -std::expm1((1.0 - p->alpha()) * std::log(x / p->x0()));
    }
    if (x <= 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    const double mu = mean(spec);
    return std::clamp(partial_means(spec, std::log(x), kQuadTol * mu).lower / mu, 0.0, 1.0);
}

double upper_incomplete_first_moment(const DistributionSpec& spec, double x) {
    require_not_nan(x, "upper_incomplete_first_moment");
    require_finite_mean(spec, "upper_incomplete_first_moment");
    if (const auto* p = std::get_if<Pareto>(&spec)) {
        if (x <= p->x0()) return 1.0;
        return std::pow(x / p->x0(), 1.0 - p->alpha());
    }
    if (x <= 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    const double mu = mean(spec);
    return std::clamp(partial_means(spec, std::log(x), kQuadTol * mu).upper / mu, 0.0, 1.0);
}

double theoretical_lambda_p(const DistributionSpec& spec, double p) {
    require_probability(p, "theoretical_lambda_p");
    require_finite_mean(spec, "theoretical_lambda_p");
    if (const auto* d = std::get_if<Pareto>(&spec)) return 1.0 / d->alpha();

    const double upper = upper_incomplete_first_moment(spec, quantile(spec, p));
    if (!(upper > 0.0)) throw NumericDegeneracyError("theoretical_lambda_p: 1 - Q underflows at p");
    return 1.0 - std::log(upper) / std::log1p(-p);
}

double lambda_at(const DistributionSpec& spec, double x) {
    require_not_nan(x, "lambda_at");
    require_finite_mean(spec, "lambda_at");
    if (!(cdf(spec, x) > 0.0)) throw DomainError("lambda_at: x lies below the support");
    const double tail = survival(spec, x);
    if (tail <= kSurvivalFloor) {
        throw NumericDegeneracyError("lambda_at: F(x) >= 1 - 1e-15 at x = " + std::to_string(x));
    }
    if (const auto* d = std::get_if<Pareto>(&spec)) return 1.0 / d->alpha();

    const double upper = upper_incomplete_first_moment(spec, x);
    if (!(upper > 0.0)) throw NumericDegeneracyError("lambda_at: 1 - Q underflows at x");
    return 1.0 - std::log(upper) / std::log(tail);
}

std::vector<double> lambda_limit_check(const DistributionSpec& spec, std::span<const double> x_grid) {
    std::vector<double> out;
    out.reserve(x_grid.size());
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        if (i > 0 && !(x_grid[i] > x_grid[i - 1])) throw DomainError("lambda_limit_check: grid must be ascending");
        out.push_back(lambda_at(spec, x_grid[i]));
    }
    return out;
}

Pareto truncate_spec(const Pareto& spec, double x2) {
    if (!(x2 > spec.x0()) || !std::isfinite(x2)) {
        throw DomainError("truncate_spec: threshold must exceed x0 = " + format_g17(spec.x0()));
    }
    return Pareto(spec.alpha(), x2);
}

Pareto truncate_spec(const DistributionSpec& spec, double x2) {
    const auto* p = std::get_if<Pareto>(&spec);
    if (!p) throw UnsupportedFamilyError("truncate_spec: only Pareto is closed under truncation, got " + family_name(spec));
    return truncate_spec(*p, x2);
}

}  // namespace lambdatail
