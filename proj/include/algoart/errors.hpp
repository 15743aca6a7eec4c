#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace algoart {

/// Invalid argument or configuration (maps to CLI exit code 2).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed input document. `line()` is 1-based; 0 means "whole document".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Numerical failure: stability violation or non-finite values (CLI exit code 3).
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& message, double last_stable_time)
        : std::runtime_error(message), last_stable_time_(last_stable_time) {}

    double last_stable_time() const noexcept { return last_stable_time_; }

private:
    double last_stable_time_;
};

}  // namespace algoart
