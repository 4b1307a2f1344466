#pragma once

#include "lambdatail/random.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace lambdatail {

// Type I Pareto: F(x) = 1 - (x/x0)^-alpha for x >= x0.
class Pareto {
public:
    Pareto(double alpha, double x0);

    double alpha() const noexcept { return alpha_; }
    double x0() const noexcept { return x0_; }

    friend bool operator==(const Pareto&, const Pareto&) = default;

private:
    double alpha_;
    double x0_;
};

// Frechet with unit scale: F(x) = exp(-x^-alpha) for x > 0.
class Frechet {
public:
    explicit Frechet(double alpha);

    double alpha() const noexcept { return alpha_; }

    friend bool operator==(const Frechet&, const Frechet&) = default;

private:
    double alpha_;
};

// log X ~ Normal(mu, sigma^2). Not regularly varying; serves as a control family.
class LogNormal {
public:
    LogNormal(double mu, double sigma);

    double mu() const noexcept { return mu_; }
    double sigma() const noexcept { return sigma_; }

    friend bool operator==(const LogNormal&, const LogNormal&) = default;

private:
    double mu_;
    double sigma_;
};

using DistributionSpec = std::variant<Pareto, Frechet, LogNormal>;

// Parses `pareto:ALPHA,X0`, `frechet:ALPHA` or `lognormal:MU,SIGMA`.
// Throws std::invalid_argument on syntax errors and DomainError on bad parameters.
DistributionSpec parse_distribution(std::string_view text);

// Inverse of parse_distribution (17 significant digits).
std::string to_string(const DistributionSpec& spec);

std::string family_name(const DistributionSpec& spec);

// Tail index alpha for the regularly varying families; nullopt for LogNormal.
std::optional<double> tail_index(const DistributionSpec& spec);

bool has_finite_mean(const DistributionSpec& spec);

double cdf(const DistributionSpec& spec, double x);

// 1 - F(x), evaluated without cancellation.
double survival(const DistributionSpec& spec, double x);

double pdf(const DistributionSpec& spec, double x);

// Generalized inverse inf{x : F(x) >= p}; throws DomainError unless 0 < p < 1.
double quantile(const DistributionSpec& spec, double p);

// n inverse-transform draws: value i is quantile(spec, u_i) for the i-th
// draw u_i of UniformStream(seed).
std::vector<double> sample(const DistributionSpec& spec, std::size_t n, Seed seed);

// Closed-form mean; throws InfiniteMeanError when alpha <= 1.
double mean(const DistributionSpec& spec);

// Q(x) = (1/mu) * integral_0^x t f(t) dt. Closed form for Pareto, adaptive
// quadrature (absolute tolerance 1e-10) otherwise.
double incomplete_first_moment(const DistributionSpec& spec, double x);

// 1 - Q(x), computed from the upper tail so it keeps relative accuracy for large x.
double upper_incomplete_first_moment(const DistributionSpec& spec, double x);

// lambda(p) = 1 - log(1 - Q(F^-1(p))) / log(1 - p). Exactly 1/alpha for Pareto.
double theoretical_lambda_p(const DistributionSpec& spec, double p);

// lambda(x) = 1 - log(1 - Q(x)) / log(1 - F(x)) for x inside the support.
// Throws NumericDegeneracyError when F(x) >= 1 - 1e-15.
double lambda_at(const DistributionSpec& spec, double x);

// lambda_at over an ascending grid.
std::vector<double> lambda_limit_check(const DistributionSpec& spec, std::span<const double> x_grid);

// Law of X | X > x2 for X ~ Pareto(alpha, x0): Pareto(alpha, x2).
Pareto truncate_spec(const Pareto& spec, double x2);
Pareto truncate_spec(const DistributionSpec& spec, double x2);

}  // namespace lambdatail
