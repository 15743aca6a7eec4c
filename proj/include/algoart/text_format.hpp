#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace algoart {

/// Locale-independent fixed-point formatting. A result that would print as
/// negative zero ("-0.000") is normalized to "0.000".
std::string format_fixed(double value, int decimals);

/// Parses a finite double from the whole of `text` (no locale, no trailing junk).
bool parse_double(std::string_view text, double& out);

/// Parses a non-negative or signed integer from the whole of `text`.
bool parse_int(std::string_view text, long long& out);

std::string_view trim(std::string_view text);

/// Splits on runs of ASCII whitespace.
std::vector<std::string_view> split_ws(std::string_view text);

/// Splits on `sep`, trimming every field. An empty input yields no fields.
std::vector<std::string_view> split_trimmed(std::string_view text, char sep);

/// Splits a document into lines on LF, dropping a trailing CR on each line.
std::vector<std::string_view> split_lines(std::string_view text);

}  // namespace algoart
