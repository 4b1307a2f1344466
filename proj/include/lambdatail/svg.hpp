#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lambdatail::svg {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

// Standalone line chart on [0,1] x [0,1]: one polyline per series, axes
// labelled "p" and "lambda", and a dashed horizontal line at `reference`.
std::string render_lambda_chart(const std::vector<Series>& series, std::optional<double> reference,
                                const std::string& title);

}  // namespace lambdatail::svg
