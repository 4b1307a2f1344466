#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lambdatail {

// Argument outside an operation's domain (p outside (0,1), x2 <= x0, k >= n, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The family/parameters have no finite mean (alpha <= 1).
class InfiniteMeanError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Operation only defined for a particular family (e.g. truncation of a non-Pareto spec).
class UnsupportedFamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed or invalid input data. Carries the 1-based source line when known (0 otherwise).
class DataError : public std::invalid_argument {
public:
    explicit DataError(const std::string& what, std::size_t line = 0)
        : std::invalid_argument(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A computation that cannot produce a meaningful finite value.
class NumericDegeneracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Empirical curve hit L_n(p_i) ~ 1.
class DegenerateCurveError : public NumericDegeneracyError {
public:
    using NumericDegeneracyError::NumericDegeneracyError;
};

// Sample carries no inequality (lambda_bar = 0) or no spacing at the top.
class DegenerateSampleError : public NumericDegeneracyError {
public:
    using NumericDegeneracyError::NumericDegeneracyError;
};

}  // namespace lambdatail
