#pragma once

#include "lambdatail/empirical.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lambdatail::io {

struct NumberedValue {
    double value;
    std::size_t line;  // 1-based
};

// One decimal value per line. Blank lines and lines whose first non-blank
// character is '#' are skipped. Throws DataError(line) on anything unparsable.
std::vector<NumberedValue> read_plain_values(std::istream& in);

// Column `column` of a comma-separated file whose first line is a header.
std::vector<NumberedValue> read_csv_column(std::istream& in, std::string_view column);

// Reads `path` (plain format, or CSV when `column` is set) and validates it
// as a Sample; nonpositive or non-finite values raise DataError naming the line.
Sample load_sample(const std::filesystem::path& path, const std::optional<std::string>& column = std::nullopt);

Sample to_sample(const std::vector<NumberedValue>& values);

// printf "%.*g"
std::string format_g(double v, int significant_digits = 17);

}  // namespace lambdatail::io
