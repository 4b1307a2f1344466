#include "lambdatail/svg.hpp"

#include "lambdatail/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace lambdatail::svg {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 420;
constexpr double kLeft = 60;
constexpr double kRight = 20;
constexpr double kTop = 40;
constexpr double kBottom = 50;

constexpr std::array<const char*, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

double px(double x) { return kLeft + std::clamp(x, 0.0, 1.0) * (kWidth - kLeft - kRight); }
double py(double y) { return kHeight - kBottom - std::clamp(y, 0.0, 1.0) * (kHeight - kTop - kBottom); }

std::string num(double v) { return io::format_g(v, 6); }

std::string escape(const std::string& s) {
    std::string out;
    for (const char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_lambda_chart(const std::vector<Series>& series, std::optional<double> reference,
                                const std::string& title) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "  <text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"15\">" << escape(title) << "</text>\n";

    // axes and ticks
    out << "  <g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n"
        << "    <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(1) << "\" y2=\"" << py(0) << "\"/>\n"
        << "    <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\"" << py(1) << "\"/>\n"
        << "  </g>\n"
        << "  <g font-family=\"sans-serif\" font-size=\"11\">\n";
    for (int t = 0; t <= 5; ++t) {
        const double v = t / 5.0;
        out << "    <text x=\"" << num(px(v)) << "\" y=\"" << num(py(0) + 16) << "\" text-anchor=\"middle\">"
            << num(v) << "</text>\n"
            << "    <text x=\"" << num(px(0) - 8) << "\" y=\"" << num(py(v) + 4) << "\" text-anchor=\"end\">" << num(v)
            << "</text>\n";
    }
    out << "  </g>\n"
        << "  <text x=\"" << num(px(0.5)) << "\" y=\"" << num(kHeight - 12)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">p</text>\n"
        << "  <text x=\"16\" y=\"" << num(py(0.5)) << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"13\" transform=\"rotate(-90 16 " << num(py(0.5)) << ")\">lambda</text>\n";

    if (reference && std::isfinite(*reference)) {
        out << "  <line x1=\"" << px(0) << "\" y1=\"" << num(py(*reference)) << "\" x2=\"" << px(1) << "\" y2=\""
            << num(py(*reference)) << "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";
    }

    for (std::size_t s = 0; s < series.size(); ++s) {
        const auto& line = series[s];
        const char* colour = kPalette[s % kPalette.size()];
        out << "  <polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < std::min(line.x.size(), line.y.size()); ++i) {
            if (!std::isfinite(line.y[i])) continue;
            out << (i ? " " : "") << num(px(line.x[i])) << ',' << num(py(line.y[i]));
        }
        out << "\"/>\n";
        if (!line.label.empty()) {
            const double ly = kTop + 6 + 16.0 * static_cast<double>(s);
            out << "  <text x=\"" << num(px(1) - 4) << "\" y=\"" << num(ly)
                << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << colour << "\">"
                << escape(line.label) << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace lambdatail::svg
