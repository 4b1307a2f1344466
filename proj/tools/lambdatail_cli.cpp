// lambdatail: command-line front end.
//
// Exit codes: 0 success, 1 usage/config error, 2 data error, 3 numeric degeneracy.

#include "lambdatail/distribution.hpp"
#include "lambdatail/empirical.hpp"
#include "lambdatail/errors.hpp"
#include "lambdatail/estimate.hpp"
#include "lambdatail/io.hpp"
#include "lambdatail/mclab.hpp"
#include "lambdatail/svg.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace lt = lambdatail;
namespace fs = std::filesystem;

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2, kDegenerate = 3 };

constexpr int kSummaryDigits = 4;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<std::string> in;
    std::optional<std::string> column;
    std::optional<std::string> out;
    std::optional<std::string> dist;
    std::size_t n = 500;
    std::uint64_t seed = 1;
    std::size_t reps = 100;
    std::vector<double> truncate_q{0.0, 0.25, 0.5, 0.75};
    std::optional<std::size_t> k;
    std::size_t boot = 199;
    bool render = false;
    std::size_t threads = 1;
    std::optional<std::string> curves;
};

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw UsageError("write failed for '" + path.string() + "'");
}

void emit(const std::optional<std::string>& path, const std::string& content) {
    if (path) {
        write_file(*path, content);
    } else {
        std::cout << content;
    }
}

fs::path svg_path_for(const std::string& path) {
    fs::path p(path);
    p.replace_extension(".svg");
    return p;
}

// Exactly one of --in / --dist. With --dist the sample is simulated from --n and --seed.
lt::SortedSample load_data(const Options& opt) {
    if (opt.in.has_value() == opt.dist.has_value()) {
        throw UsageError("give exactly one data source: --in PATH or --dist STR");
    }
    if (opt.in) return lt::SortedSample(lt::io::load_sample(*opt.in, opt.column));
    const auto spec = lt::parse_distribution(*opt.dist);
    return lt::SortedSample(lt::sample(spec, opt.n, lt::Seed{opt.seed}));
}

int cmd_estimate(const Options& opt) {
    const auto data = load_data(opt);
    const auto est = lt::lambda_tail_index(data);
    std::optional<lt::HillEstimate> hill;
    if (opt.k) hill = lt::hill_estimator(data, *opt.k);

    std::cout << lt::to_record(est, kSummaryDigits);
    if (hill) {
        std::cout << "hill_k=" << hill->k << "\n"
                  << "hill_gamma_hat=" << lt::io::format_g(hill->gamma_hat, kSummaryDigits) << "\n"
                  << "hill_alpha_hat=" << lt::io::format_g(hill->alpha_hat, kSummaryDigits) << "\n";
    }
    if (est.suspect_infinite_mean) {
        std::cout << "warning=suspect infinite mean: alpha_hat <= 1, the lambda curve assumes a finite mean\n";
        std::cerr << "warning: alpha_hat <= 1 (suspect infinite mean); the lambda curve assumes a finite mean\n";
    }
    if (opt.out) write_file(*opt.out, lt::estimate_csv_header() + "\n" + lt::to_csv_row(est, hill) + "\n");
    return kOk;
}

int cmd_curve(const Options& opt) {
    if (opt.render && !opt.out) throw UsageError("--render needs --out (the SVG is written next to it)");
    const auto data = load_data(opt);
    const auto curve = lt::lambda_curve(data);

    std::ostringstream csv;
    csv << "p,lambda\n";
    for (const auto& pt : curve.points) csv << lt::io::format_g(pt.p) << ',' << lt::io::format_g(pt.lambda) << '\n';
    emit(opt.out, csv.str());

    if (opt.render) {
        const auto est = lt::lambda_tail_index(curve);
        lt::svg::Series series{"lambda-hat", {}, {}};
        for (const auto& pt : curve.points) {
            series.x.push_back(pt.p);
            series.y.push_back(pt.lambda);
        }
        const std::string title = "lambda-hat(p), n = " + std::to_string(curve.n) +
                                  ", alpha-hat = " + lt::io::format_g(est.alpha_hat, kSummaryDigits);
        write_file(svg_path_for(*opt.out), lt::svg::render_lambda_chart({series}, est.lambda_bar, title));
    }
    return kOk;
}

int cmd_simulate(const Options& opt) {
    if (!opt.dist) throw UsageError("simulate needs --dist");
    if (opt.n < 1) throw UsageError("--n must be >= 1");
    const auto spec = lt::parse_distribution(*opt.dist);
    const auto values = lt::sample(spec, opt.n, lt::Seed{opt.seed});
    std::ostringstream text;
    for (const double v : values) text << lt::io::format_g(v) << '\n';
    emit(opt.out, text.str());
    return kOk;
}

int cmd_gof(const Options& opt) {
    if (opt.boot < lt::kMinBootstrap) {
        throw UsageError("--boot must be >= " + std::to_string(lt::kMinBootstrap));
    }
    const auto data = load_data(opt);
    const auto result = lt::pareto_gof_test(data, opt.boot, lt::Seed{opt.seed}, opt.threads);
    std::cout << lt::to_record(result, kSummaryDigits);
    if (opt.out) write_file(*opt.out, lt::gof_csv_header() + "\n" + lt::to_csv_row(result) + "\n");
    return kOk;
}

int cmd_bench(const Options& opt) {
    if (!opt.dist) throw UsageError("bench needs --dist");
    lt::ExperimentConfig cfg;
    cfg.dist = lt::parse_distribution(*opt.dist);
    cfg.n = opt.n;
    cfg.reps = opt.reps;
    cfg.truncation_quantiles = opt.truncate_q;
    cfg.seed = lt::Seed{opt.seed};
    cfg.hill_k = opt.k;
    cfg.threads = opt.threads;
    cfg.validate();

    const auto report = lt::truncation_sweep(cfg);
    emit(opt.out, lt::to_csv(report));
    std::cerr << "bench: " << report.reps << " replications in "
              << lt::io::format_g(report.wall_seconds, kSummaryDigits) << " s\n";

    if (opt.curves || opt.render) {
        if (!lt::has_finite_mean(cfg.dist)) throw UsageError("curve ensembles need a finite-mean distribution");
        const auto ensemble = lt::replicate_curves(cfg);
        const std::optional<std::string> curves_path =
            opt.curves ? opt.curves
                       : opt.out ? std::optional<std::string>(fs::path(*opt.out).replace_extension(".curves.csv"))
                                 : std::nullopt;
        if (!curves_path) throw UsageError("--render needs --out or --curves");
        write_file(*curves_path, lt::to_csv(ensemble));
        if (opt.render) {
            std::vector<lt::svg::Series> series;
            for (const auto& level : ensemble.levels) {
                series.push_back({"q = " + lt::io::format_g(level.quantile, kSummaryDigits), ensemble.p_grid,
                                  level.mean_lambda});
            }
            write_file(svg_path_for(*curves_path),
                       lt::svg::render_lambda_chart(series, ensemble.reference,
                                                    "mean lambda-hat(p), " + *opt.dist + ", n = " +
                                                        std::to_string(cfg.n) + ", reps = " +
                                                        std::to_string(cfg.reps)));
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heavy-tail analysis with the lambda(p) inequality curve"};
    app.require_subcommand(1);
    Options opt;

    const auto add_source = [&opt](CLI::App* sub) {
        sub->add_option("--in", opt.in, "Input data: one value per line (# comments) or CSV with --column");
        sub->add_option("--column", opt.column, "Read this named column of a CSV file");
        sub->add_option("--dist", opt.dist, "Simulate the data instead: pareto:A,X0 | frechet:A | lognormal:MU,S");
        sub->add_option("--n", opt.n, "Sample size when simulating")->capture_default_str();
        sub->add_option("--seed", opt.seed, "Seed")->capture_default_str();
        sub->add_option("--out", opt.out, "Output path");
    };

    auto* estimate = app.add_subcommand("estimate", "Tail index from the lambda curve (plus Hill with --k)");
    add_source(estimate);
    estimate->add_option("--k", opt.k, "Upper order statistics for the Hill estimator");

    auto* curve = app.add_subcommand("curve", "Empirical lambda curve as CSV (p,lambda)");
    add_source(curve);
    curve->add_flag("--render", opt.render, "Also write an SVG chart next to --out");

    auto* simulate = app.add_subcommand("simulate", "Draw a seeded sample, one value per line");
    simulate->add_option("--dist", opt.dist, "pareto:A,X0 | frechet:A | lognormal:MU,S")->required();
    simulate->add_option("--n", opt.n, "Sample size")->capture_default_str();
    simulate->add_option("--seed", opt.seed, "Seed")->capture_default_str();
    simulate->add_option("--out", opt.out, "Output path (stdout when omitted)");

    auto* gof = app.add_subcommand("gof", "Bootstrap goodness-of-fit test for the Pareto model");
    add_source(gof);
    gof->add_option("--boot", opt.boot, "Bootstrap replicates (>= 99)")->capture_default_str();
    gof->add_option("--threads", opt.threads, "Worker threads (0 = all cores)")->capture_default_str();

    auto* bench = app.add_subcommand("bench", "Monte Carlo benchmark across truncation levels");
    bench->add_option("--dist", opt.dist, "pareto:A,X0 | frechet:A | lognormal:MU,S")->required();
    bench->add_option("--n", opt.n, "Sample size")->capture_default_str();
    bench->add_option("--reps", opt.reps, "Replications")->capture_default_str();
    bench->add_option("--truncate-q", opt.truncate_q, "Ascending empirical quantile levels in [0,1)")
        ->delimiter(',')
        ->capture_default_str();
    bench->add_option("--k", opt.k, "Also run Hill with this k");
    bench->add_option("--seed", opt.seed, "Seed")->capture_default_str();
    bench->add_option("--threads", opt.threads, "Worker threads (0 = all cores)")->capture_default_str();
    bench->add_option("--out", opt.out, "Report CSV (stdout when omitted)");
    bench->add_option("--curves", opt.curves, "Write the mean-curve ensemble (level,p,mean_lambda) here");
    bench->add_flag("--render", opt.render, "Also write an SVG of the ensemble");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*estimate) return cmd_estimate(opt);
        if (*curve) return cmd_curve(opt);
        if (*simulate) return cmd_simulate(opt);
        if (*gof) return cmd_gof(opt);
        if (*bench) return cmd_bench(opt);
    } catch (const lt::DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kData;
    } catch (const lt::NumericDegeneracyError& e) {
        std::cerr << "numeric degeneracy: " << e.what() << '\n';
        return kDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
