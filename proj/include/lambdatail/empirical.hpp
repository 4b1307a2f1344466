#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lambdatail {

// Positive finite observations, n >= 2. Construction rejects anything else
// with DataError (nothing is silently dropped).
class Sample {
public:
    explicit Sample(std::vector<double> values);

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

private:
    std::vector<double> values_;
};

// Order statistics X_(1) <= ... <= X_(n) with ascending running sums.
// prefix_sum(i) = X_(1) + ... + X_(i), accumulated left to right, and
// total() == prefix_sum(n).
class SortedSample {
public:
    explicit SortedSample(const Sample& sample);
    explicit SortedSample(std::vector<double> values);

    std::span<const double> ordered() const noexcept { return ordered_; }
    std::size_t size() const noexcept { return ordered_.size(); }
    double operator[](std::size_t i) const { return ordered_[i]; }
    double min() const noexcept { return ordered_.front(); }
    double max() const noexcept { return ordered_.back(); }

    // i in [0, n]
    double prefix_sum(std::size_t i) const { return i == 0 ? 0.0 : prefix_[i - 1]; }
    double total() const noexcept { return prefix_.back(); }

    bool all_equal() const noexcept { return ordered_.front() == ordered_.back(); }

    // Values strictly above `threshold`, still sorted. Throws DataError if fewer than 2 remain.
    SortedSample above(double threshold) const;

    // Every value multiplied by c > 0.
    SortedSample scaled(double c) const;

private:
    void init();

    std::vector<double> ordered_;
    std::vector<double> prefix_;
};

struct CurvePoint {
    double p;
    double lambda;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

// lambda-hat_i at p_i = i/n for i = 1..m, m = n - floor(sqrt(n)).
struct LambdaCurve {
    std::vector<CurvePoint> points;
    std::size_t n = 0;
    std::size_t m = 0;

    friend bool operator==(const LambdaCurve&, const LambdaCurve&) = default;
};

// n - floor(sqrt(n)) with an exact integer square root.
std::size_t lambda_cutoff(std::size_t n);

// F_n(x) = #{X_i <= x} / n
double ecdf(const SortedSample& s, double x);

// Q_n(x) = sum_{X_i <= x} X_i / T
double empirical_q(const SortedSample& s, double x);

// L_n(p) = sum_{j <= i} X_(j) / T for i/n <= p < (i+1)/n, and 0 for p < 1/n.
// Throws DomainError unless 0 < p < 1.
double empirical_lorenz(const SortedSample& s, double p);

// lambda-hat_i = 1 - log(1 - L_n(p_i)) / log(1 - p_i).
//
// The exact value lies in [0,1] because L_n(p) <= p; results are clamped to
// that range to absorb last-bit rounding when neighbouring values tie. An
// all-equal sample gives identically zero. Throws DegenerateCurveError if
// some L_n(p_i) >= 1 - 1e-15.
LambdaCurve lambda_curve(const SortedSample& s);

}  // namespace lambdatail
