#include "lambdatail/distribution.hpp"
#include "lambdatail/errors.hpp"
#include "lambdatail/estimate.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace lambdatail;

namespace {

// Deterministic Pareto(alpha, 1) quantile grid, no sampling noise.
SortedSample pareto_grid(double alpha, std::size_t n) {
    std::vector<double> v;
    for (std::size_t i = 1; i <= n; ++i) v.push_back(quantile(Pareto(alpha, 1.0), (i - 0.5) / n));
    return SortedSample(std::move(v));
}

}  // namespace

TEST_CASE("lambda estimator on a Pareto quantile grid") {
    const auto est = lambda_tail_index(pareto_grid(2.0, 1000));
    CHECK(est.alpha_hat >= 1.8);
    CHECK(est.alpha_hat <= 2.2);
    CHECK(est.n == 1000);
    CHECK(est.m == 1000 - 31);
    CHECK(est.alpha_hat == doctest::Approx(1.0 / est.lambda_bar).epsilon(1e-15));
    CHECK_FALSE(est.suspect_infinite_mean);
}

TEST_CASE("lambda estimator equals the reciprocal mean of the curve") {
    const SortedSample s(sample(Frechet(2.5), 400, Seed{5}));
    const auto curve = lambda_curve(s);
    double sum = 0.0;
    for (const auto& pt : curve.points) sum += pt.lambda;
    const auto est = lambda_tail_index(s);
    CHECK(est.lambda_bar == doctest::Approx(sum / curve.m).epsilon(1e-13));
    CHECK(lambda_tail_index(curve) == est);
}

TEST_CASE("lambda estimator flags alpha_hat <= 1") {
    // lambda-hat <= 1 forces alpha_hat >= 1; the flag is reached when the top
    // value carries all of the mass to double precision.
    const auto est = lambda_tail_index(SortedSample({1e-20, 2e-20, 3e-20, 4e-20, 5e-20, 6e-20, 7e-20, 8e-20, 1.0}));
    CHECK(est.lambda_bar == 1.0);
    CHECK(est.alpha_hat == 1.0);
    CHECK(est.suspect_infinite_mean);

    const auto heavy = lambda_tail_index(SortedSample(sample(Pareto(0.5, 1.0), 2000, Seed{9})));
    CHECK(heavy.alpha_hat >= 1.0);
    CHECK(heavy.alpha_hat < 1.01);
}

TEST_CASE("lambda estimator on identical values") {
    CHECK_THROWS_AS(lambda_tail_index(SortedSample({2.0, 2.0, 2.0, 2.0})), DegenerateSampleError);
}

TEST_CASE("Hill estimator") {
    const SortedSample s({1.0, 2.0, 4.0, 8.0, 16.0});
    const auto h = hill_estimator(s, 4);
    CHECK(h.gamma_hat == doctest::Approx(2.5 * std::numbers::ln2).epsilon(1e-14));
    CHECK(h.alpha_hat == doctest::Approx(1.0 / (2.5 * std::numbers::ln2)).epsilon(1e-14));
    CHECK(h.k == 4);
    CHECK(hill_estimator(s, 1).gamma_hat == doctest::Approx(std::numbers::ln2).epsilon(1e-14));
    CHECK_THROWS_AS(hill_estimator(s, 5), DomainError);
    CHECK_THROWS_AS(hill_estimator(s, 0), DomainError);
    CHECK_THROWS_AS(hill_estimator(SortedSample({1.0, 3.0, 3.0, 3.0}), 2), DegenerateSampleError);

    const auto grid = hill_estimator(pareto_grid(2.0, 1000), 100);
    CHECK(grid.gamma_hat == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("gof statistic") {
    LambdaCurve c;
    c.points = {{0.25, 0.4}, {0.5, 0.5}, {0.75, 0.7}};
    c.n = 4;
    c.m = 3;
    CHECK(gof_statistic(c, 0.5) == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("gof test") {
    const SortedSample pareto(sample(Pareto(2.0, 1.0), 300, Seed{31}));
    const auto g = pareto_gof_test(pareto, 99, Seed{4});
    CHECK(g.n_boot == 99);
    CHECK(g.p_value >= 1.0 / 100.0);
    CHECK(g.p_value <= 1.0);
    CHECK(g.scale_null == pareto.min());
    CHECK(g.alpha_hat_null == lambda_tail_index(pareto).alpha_hat);
    CHECK(g.statistic == gof_statistic(lambda_curve(pareto), lambda_tail_index(pareto).lambda_bar));
    // p is a multiple of 1/(B+1).
    const double scaled = g.p_value * 100.0;
    CHECK(std::abs(scaled - std::round(scaled)) < 1e-9);

    CHECK_THROWS_AS(pareto_gof_test(pareto, 50, Seed{4}), DomainError);

    const SortedSample lognormal(sample(LogNormal(0.0, 1.0), 1000, Seed{32}));
    CHECK(pareto_gof_test(lognormal, 199, Seed{5}).p_value <= 0.05);
}

TEST_CASE("gof test is reproducible across thread counts") {
    const SortedSample s(sample(Frechet(2.0), 200, Seed{77}));
    const auto a = pareto_gof_test(s, 99, Seed{8}, 1);
    const auto b = pareto_gof_test(s, 99, Seed{8}, 4);
    CHECK(a.p_value == b.p_value);
    CHECK(a.statistic == b.statistic);
    CHECK(to_record(a) == to_record(b));
}

TEST_CASE("records and CSV rows") {
    TailIndexEstimate e{2.0, 0.5, 10, 7, false};
    CHECK(to_record(e, 4) == "estimator=lambda\nalpha_hat=2\nlambda_bar=0.5\nn=10\nm=7\nsuspect_infinite_mean=false\n");
    CHECK(to_csv_row(e) == "10,7,0.5,2,0,,,");
    CHECK(to_csv_row(e, HillEstimate{0.25, 4.0, 3}) == "10,7,0.5,2,0,3,0.25,4");
    CHECK(estimate_csv_header() ==
          "n,m,lambda_bar,alpha_hat,suspect_infinite_mean,hill_k,hill_gamma_hat,hill_alpha_hat");
}
