#include "lambdatail/io.hpp"

#include "lambdatail/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>

namespace lambdatail::io {

namespace {

std::string_view trim(std::string_view s) {
    constexpr std::string_view blanks = " \t\r\n";
    const auto first = s.find_first_not_of(blanks);
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(blanks);
    return s.substr(first, last - first + 1);
}

std::string_view unquote(std::string_view s) {
    s = trim(s);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
    return s;
}

void strip_bom(std::string& line) {
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
}

double parse_value(std::string_view token, std::size_t line) {
    token = unquote(token);
    if (token.empty()) throw DataError("empty value", line);
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (*first == '+') ++first;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) throw DataError("value out of range '" + std::string(token) + "'", line);
    if (ec != std::errc{} || ptr != last) throw DataError("cannot parse '" + std::string(token) + "' as a number", line);
    return value;
}

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> fields;
    while (true) {
        const auto comma = line.find(',');
        fields.push_back(line.substr(0, comma));
        if (comma == std::string_view::npos) break;
        line.remove_prefix(comma + 1);
    }
    return fields;
}

}  // namespace

std::vector<NumberedValue> read_plain_values(std::istream& in) {
    std::vector<NumberedValue> out;
    std::string line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        if (number == 1) strip_bom(line);
        const auto body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        out.push_back({parse_value(body, number), number});
    }
    return out;
}

std::vector<NumberedValue> read_csv_column(std::istream& in, std::string_view column) {
    std::string line;
    if (!std::getline(in, line)) throw DataError("CSV input is empty");
    strip_bom(line);
    const auto header = split_commas(line);
    std::size_t index = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (unquote(header[i]) == column) {
            index = i;
            break;
        }
    }
    if (index == header.size()) throw DataError("CSV header has no column '" + std::string(column) + "'", 1);

    std::vector<NumberedValue> out;
    for (std::size_t number = 2; std::getline(in, line); ++number) {
        if (trim(line).empty()) continue;
        const auto fields = split_commas(line);
        if (fields.size() != header.size()) {
            throw DataError("expected " + std::to_string(header.size()) + " fields, found " +
                                std::to_string(fields.size()),
                            number);
        }
        out.push_back({parse_value(fields[index], number), number});
    }
    return out;
}

Sample to_sample(const std::vector<NumberedValue>& values) {
    std::vector<double> raw;
    raw.reserve(values.size());
    for (const auto& v : values) {
        if (!std::isfinite(v.value)) throw DataError("value is not finite", v.line);
        if (!(v.value > 0.0)) throw DataError("value " + format_g(v.value, 6) + " is not positive", v.line);
        raw.push_back(v.value);
    }
    return Sample(std::move(raw));
}

Sample load_sample(const std::filesystem::path& path, const std::optional<std::string>& column) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path.string() + "'");
    return to_sample(column ? read_csv_column(in, *column) : read_plain_values(in));
}

std::string format_g(double v, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, v);
    return buf;
}

}  // namespace lambdatail::io
