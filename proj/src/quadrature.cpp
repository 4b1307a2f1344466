#include "lambdatail/quadrature.hpp"

#include "lambdatail/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace lambdatail::quad {

namespace {

// Kronrod abscissae (positive half, descending) and weights; the Gauss 7-point
// rule uses every other node (odd indices) plus the centre.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    double value;
    double error;

    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const Integrand& f, double a, double b, std::size_t& evals) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(centre);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    bool finite = std::isfinite(fc);

    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(centre - dx);
        const double f2 = f(centre + dx);
        finite = finite && std::isfinite(f1) && std::isfinite(f2);
        kronrod += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
    }
    evals += 15;
    if (!finite) {
        throw NumericDegeneracyError("quadrature: integrand is not finite on [" + std::to_string(a) +
                                     ", " + std::to_string(b) + "]");
    }

    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

Result integrate(const Integrand& f, double a, double b, const Options& opts) {
    if (!(a <= b) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("quadrature: need finite a <= b");
    }
    Result out;
    if (a == b) return out;

    std::vector<Segment> heap;
    heap.reserve(std::min<std::size_t>(opts.max_subintervals, 256));
    heap.push_back(gauss_kronrod(f, a, b, out.evaluations));
    double error = heap.front().error;

    while (error > opts.abs_tol) {
        if (heap.size() >= opts.max_subintervals) {
            throw NumericDegeneracyError("quadrature: subinterval budget exhausted (error estimate " +
                                         std::to_string(error) + ")");
        }
        std::pop_heap(heap.begin(), heap.end());
        const Segment worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            throw NumericDegeneracyError("quadrature: interval cannot be bisected further");
        }
        for (const Segment& half : {gauss_kronrod(f, worst.a, mid, out.evaluations),
                                    gauss_kronrod(f, mid, worst.b, out.evaluations)}) {
            heap.push_back(half);
            std::push_heap(heap.begin(), heap.end());
        }
        error = 0.0;
        for (const Segment& s : heap) error += s.error;
    }

    double total = 0.0;
    for (const Segment& s : heap) total += s.value;
    out.value = total;
    out.abs_error = error;
    return out;
}

Result integrate_upper(const Integrand& f, double a, const Options& opts) {
    const auto mapped = [&f, a](double v) {
        const double w = 1.0 - v;
        const double t = a + v / w;
        if (!std::isfinite(t)) return 0.0;
        return f(t) / (w * w);
    };
    return integrate(mapped, 0.0, 1.0, opts);
}

Result integrate_lower(const Integrand& f, double b, const Options& opts) {
    const auto mapped = [&f, b](double v) {
        const double w = 1.0 - v;
        const double t = b - v / w;
        if (!std::isfinite(t)) return 0.0;
        return f(t) / (w * w);
    };
    return integrate(mapped, 0.0, 1.0, opts);
}

}  // namespace lambdatail::quad
