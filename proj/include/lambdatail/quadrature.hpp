#pragma once

#include <cstddef>
#include <functional>

namespace lambdatail::quad {

struct Options {
    double abs_tol = 1e-10;
    // Hard cap on the number of subintervals kept by the adaptive scheme.
    std::size_t max_subintervals = 4000;
};

struct Result {
    double value = 0.0;
    double abs_error = 0.0;
    std::size_t evaluations = 0;
};

using Integrand = std::function<double(double)>;

// Globally adaptive Gauss-Kronrod (7/15) integration over a finite [a, b].
// Always bisects the subinterval with the largest error estimate. Throws
// NumericDegeneracyError when the subinterval budget is exhausted before the
// summed error estimate drops below abs_tol, or when the integrand returns a
// non-finite value.
Result integrate(const Integrand& f, double a, double b, const Options& opts = {});

// Integral over [a, +inf) via t = a + v/(1-v), v in [0,1).
Result integrate_upper(const Integrand& f, double a, const Options& opts = {});

// Integral over (-inf, b] via t = b - v/(1-v), v in [0,1).
Result integrate_lower(const Integrand& f, double b, const Options& opts = {});

}  // namespace lambdatail::quad
