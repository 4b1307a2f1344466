#include "lambdatail/distribution.hpp"
#include "lambdatail/empirical.hpp"
#include "lambdatail/errors.hpp"
#include "lambdatail/estimate.hpp"
#include "lambdatail/mclab.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
namespace lt = lambdatail;

using namespace pybind11::literals;

namespace {

lt::SortedSample to_sorted(const std::vector<double>& values) { return lt::SortedSample(values); }

// Accepts a Pareto/Frechet/LogNormal instance or a "family:params" string.
lt::DistributionSpec to_spec(const py::handle& obj) {
    if (py::isinstance<py::str>(obj)) return lt::parse_distribution(obj.cast<std::string>());
    if (py::isinstance<lt::Pareto>(obj)) return obj.cast<lt::Pareto>();
    if (py::isinstance<lt::Frechet>(obj)) return obj.cast<lt::Frechet>();
    if (py::isinstance<lt::LogNormal>(obj)) return obj.cast<lt::LogNormal>();
    throw py::type_error("expected Pareto, Frechet, LogNormal or a distribution string");
}

py::object from_spec(const lt::DistributionSpec& spec) {
    return std::visit([](const auto& d) { return py::cast(d); }, spec);
}

py::list curve_points(const lt::LambdaCurve& c) {
    py::list out;
    for (const auto& pt : c.points) out.append(py::make_tuple(pt.p, pt.lambda));
    return out;
}

}  // namespace

PYBIND11_MODULE(_lambdatail, m) {
    m.doc() = "Tail-index estimation and diagnostics with the lambda(p) inequality curve";

    auto domain = py::register_exception<lt::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<lt::InfiniteMeanError>(m, "InfiniteMeanError", PyExc_ValueError);
    py::register_exception<lt::UnsupportedFamilyError>(m, "UnsupportedFamilyError", PyExc_TypeError);
    py::register_exception<lt::DataError>(m, "DataError", PyExc_ValueError);
    auto degenerate = py::register_exception<lt::NumericDegeneracyError>(m, "NumericDegeneracyError",
                                                                         PyExc_ArithmeticError);
    py::register_exception<lt::DegenerateCurveError>(m, "DegenerateCurveError", degenerate.ptr());
    py::register_exception<lt::DegenerateSampleError>(m, "DegenerateSampleError", degenerate.ptr());
    (void)domain;

    // distributions
    py::class_<lt::Pareto>(m, "Pareto")
        .def(py::init<double, double>(), "alpha"_a, "x0"_a)
        .def_property_readonly("alpha", &lt::Pareto::alpha)
        .def_property_readonly("x0", &lt::Pareto::x0)
        .def("__eq__", [](const lt::Pareto& a, const lt::Pareto& b) { return a == b; })
        .def("__repr__", [](const lt::Pareto& d) { return "Pareto('" + lt::to_string(d) + "')"; });
    py::class_<lt::Frechet>(m, "Frechet")
        .def(py::init<double>(), "alpha"_a)
        .def_property_readonly("alpha", &lt::Frechet::alpha)
        .def("__eq__", [](const lt::Frechet& a, const lt::Frechet& b) { return a == b; })
        .def("__repr__", [](const lt::Frechet& d) { return "Frechet('" + lt::to_string(d) + "')"; });
    py::class_<lt::LogNormal>(m, "LogNormal")
        .def(py::init<double, double>(), "mu"_a, "sigma"_a)
        .def_property_readonly("mu", &lt::LogNormal::mu)
        .def_property_readonly("sigma", &lt::LogNormal::sigma)
        .def("__eq__", [](const lt::LogNormal& a, const lt::LogNormal& b) { return a == b; })
        .def("__repr__", [](const lt::LogNormal& d) { return "LogNormal('" + lt::to_string(d) + "')"; });

    m.def("parse_distribution", [](const std::string& t) { return from_spec(lt::parse_distribution(t)); }, "text"_a);
    m.def("spec_to_string", [](const py::object& s) { return lt::to_string(to_spec(s)); }, "spec"_a);
    m.def("tail_index", [](const py::object& s) { return lt::tail_index(to_spec(s)); }, "spec"_a);
    m.def(
        "cdf", [](const py::object& s, double v) { return lt::cdf(to_spec(s), v); }, "spec"_a, "x"_a);
    m.def(
        "survival", [](const py::object& s, double v) { return lt::survival(to_spec(s), v); }, "spec"_a, "x"_a);
    m.def(
        "pdf", [](const py::object& s, double v) { return lt::pdf(to_spec(s), v); }, "spec"_a, "x"_a);
    m.def(
        "quantile", [](const py::object& s, double v) { return lt::quantile(to_spec(s), v); }, "spec"_a, "p"_a);
    m.def(
        "sample",
        [](const py::object& spec, std::size_t n, std::uint64_t seed) {
            return lt::sample(to_spec(spec), n, lt::Seed{seed});
        },
        "spec"_a, "n"_a, "seed"_a);
    m.def("mean", [](const py::object& s) { return lt::mean(to_spec(s)); }, "spec"_a);
    m.def(
        "incomplete_first_moment", [](const py::object& s, double v) { return lt::incomplete_first_moment(to_spec(s), v); }, "spec"_a, "x"_a);
    m.def(
        "upper_incomplete_first_moment", [](const py::object& s, double v) { return lt::upper_incomplete_first_moment(to_spec(s), v); }, "spec"_a, "x"_a);
    m.def(
        "theoretical_lambda_p", [](const py::object& s, double v) { return lt::theoretical_lambda_p(to_spec(s), v); }, "spec"_a, "p"_a);
    m.def(
        "lambda_at", [](const py::object& s, double v) { return lt::lambda_at(to_spec(s), v); }, "spec"_a, "x"_a);
    m.def(
        "lambda_limit_check",
        [](const py::object& spec, const std::vector<double>& grid) {
            return lt::lambda_limit_check(to_spec(spec), grid);
        },
        "spec"_a, "x_grid"_a);
    m.def(
        "truncate_spec", [](const py::object& spec, double x2) { return lt::truncate_spec(to_spec(spec), x2); },
        "spec"_a, "x2"_a);

    // empirical
    py::class_<lt::SortedSample>(m, "SortedSample")
        .def(py::init(&to_sorted), "values"_a)
        .def_property_readonly("ordered",
                               [](const lt::SortedSample& s) {
                                   return std::vector<double>(s.ordered().begin(), s.ordered().end());
                               })
        .def_property_readonly("total", &lt::SortedSample::total)
        .def("__len__", &lt::SortedSample::size);

    py::class_<lt::LambdaCurve>(m, "LambdaCurve")
        .def_property_readonly("points", &curve_points)
        .def_readonly("n", &lt::LambdaCurve::n)
        .def_readonly("m", &lt::LambdaCurve::m)
        .def("__len__", [](const lt::LambdaCurve& c) { return c.points.size(); });

    m.def("lambda_cutoff", &lt::lambda_cutoff, "n"_a);
    m.def("ecdf", [](const std::vector<double>& v, double x) { return lt::ecdf(to_sorted(v), x); }, "values"_a, "x"_a);
    m.def(
        "empirical_q", [](const std::vector<double>& v, double x) { return lt::empirical_q(to_sorted(v), x); },
        "values"_a, "x"_a);
    m.def(
        "empirical_lorenz",
        [](const std::vector<double>& v, double p) { return lt::empirical_lorenz(to_sorted(v), p); }, "values"_a,
        "p"_a);
    m.def(
        "lambda_curve", [](const std::vector<double>& v) { return lt::lambda_curve(to_sorted(v)); }, "values"_a);

    // estimation
    py::class_<lt::TailIndexEstimate>(m, "TailIndexEstimate")
        .def_readonly("alpha_hat", &lt::TailIndexEstimate::alpha_hat)
        .def_readonly("lambda_bar", &lt::TailIndexEstimate::lambda_bar)
        .def_readonly("n", &lt::TailIndexEstimate::n)
        .def_readonly("m", &lt::TailIndexEstimate::m)
        .def_readonly("suspect_infinite_mean", &lt::TailIndexEstimate::suspect_infinite_mean)
        .def("to_record", [](const lt::TailIndexEstimate& e) { return lt::to_record(e); });
    py::class_<lt::HillEstimate>(m, "HillEstimate")
        .def_readonly("gamma_hat", &lt::HillEstimate::gamma_hat)
        .def_readonly("alpha_hat", &lt::HillEstimate::alpha_hat)
        .def_readonly("k", &lt::HillEstimate::k);
    py::class_<lt::GofResult>(m, "GofResult")
        .def_readonly("statistic", &lt::GofResult::statistic)
        .def_readonly("p_value", &lt::GofResult::p_value)
        .def_readonly("n_boot", &lt::GofResult::n_boot)
        .def_readonly("alpha_hat_null", &lt::GofResult::alpha_hat_null)
        .def_readonly("scale_null", &lt::GofResult::scale_null)
        .def_readonly("boot_failures", &lt::GofResult::boot_failures)
        .def_readonly("method", &lt::GofResult::method)
        .def("to_record", [](const lt::GofResult& g) { return lt::to_record(g); });

    m.def(
        "lambda_tail_index", [](const std::vector<double>& v) { return lt::lambda_tail_index(to_sorted(v)); },
        "values"_a);
    m.def(
        "hill_estimator",
        [](const std::vector<double>& v, std::size_t k) { return lt::hill_estimator(to_sorted(v), k); }, "values"_a,
        "k"_a);
    m.def(
        "pareto_gof_test",
        [](const std::vector<double>& v, std::size_t n_boot, std::uint64_t seed, std::size_t threads) {
            py::gil_scoped_release release;
            return lt::pareto_gof_test(to_sorted(v), n_boot, lt::Seed{seed}, threads);
        },
        "values"_a, "n_boot"_a = 199, "seed"_a = 1, "threads"_a = 1);

    // Monte Carlo lab
    py::class_<lt::ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<>())
        .def_property(
            "dist", [](const lt::ExperimentConfig& c) { return from_spec(c.dist); },
            [](lt::ExperimentConfig& c, const py::object& s) { c.dist = to_spec(s); })
        .def_readwrite("n", &lt::ExperimentConfig::n)
        .def_readwrite("reps", &lt::ExperimentConfig::reps)
        .def_readwrite("truncation_quantiles", &lt::ExperimentConfig::truncation_quantiles)
        .def_property(
            "seed", [](const lt::ExperimentConfig& c) { return c.seed.value; },
            [](lt::ExperimentConfig& c, std::uint64_t s) { c.seed = lt::Seed{s}; })
        .def_readwrite("hill_k", &lt::ExperimentConfig::hill_k)
        .def_readwrite("threads", &lt::ExperimentConfig::threads)
        .def_readwrite("retain_curves", &lt::ExperimentConfig::retain_curves);

    py::class_<lt::ReportRow>(m, "ReportRow")
        .def_readonly("estimator", &lt::ReportRow::estimator)
        .def_readonly("level", &lt::ReportRow::level)
        .def_readonly("successes", &lt::ReportRow::successes)
        .def_readonly("failures", &lt::ReportRow::failures)
        .def_readonly("mean", &lt::ReportRow::mean)
        .def_readonly("sd", &lt::ReportRow::sd)
        .def_readonly("bias", &lt::ReportRow::bias)
        .def_readonly("rmse", &lt::ReportRow::rmse)
        .def_readonly("delta_first_level", &lt::ReportRow::delta_first_level);

    py::class_<lt::ExperimentReport>(m, "ExperimentReport")
        .def_readonly("dist", &lt::ExperimentReport::dist)
        .def_readonly("n", &lt::ExperimentReport::n)
        .def_readonly("reps", &lt::ExperimentReport::reps)
        .def_readonly("true_alpha", &lt::ExperimentReport::true_alpha)
        .def_readonly("rows", &lt::ExperimentReport::rows)
        .def_readonly("wall_seconds", &lt::ExperimentReport::wall_seconds)
        .def("max_pairwise_mean_difference", &lt::ExperimentReport::max_pairwise_mean_difference, "estimator"_a)
        .def("to_csv", [](const lt::ExperimentReport& r) { return lt::to_csv(r); });

    py::class_<lt::CurveLevel>(m, "CurveLevel")
        .def_readonly("quantile", &lt::CurveLevel::quantile)
        .def_readonly("mean_lambda", &lt::CurveLevel::mean_lambda)
        .def_readonly("successes", &lt::CurveLevel::successes)
        .def_readonly("failures", &lt::CurveLevel::failures)
        .def_readonly("curves", &lt::CurveLevel::curves);

    py::class_<lt::CurveEnsemble>(m, "CurveEnsemble")
        .def_readonly("p_grid", &lt::CurveEnsemble::p_grid)
        .def_readonly("levels", &lt::CurveEnsemble::levels)
        .def_readonly("reference", &lt::CurveEnsemble::reference)
        .def("to_csv", [](const lt::CurveEnsemble& e) { return lt::to_csv(e); });

    m.def(
        "replicate_curves",
        [](const lt::ExperimentConfig& cfg) {
            py::gil_scoped_release release;
            return lt::replicate_curves(cfg);
        },
        "config"_a);
    m.def(
        "estimator_benchmark",
        [](const lt::ExperimentConfig& cfg) {
            py::gil_scoped_release release;
            return lt::estimator_benchmark(cfg);
        },
        "config"_a);
    m.def(
        "truncation_sweep",
        [](const lt::ExperimentConfig& cfg) {
            py::gil_scoped_release release;
            return lt::truncation_sweep(cfg);
        },
        "config"_a);
}
