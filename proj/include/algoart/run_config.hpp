#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algoart/stochastics.hpp"

namespace algoart {

struct ConfigEntry {
    std::string key;
    std::string value;
    std::size_t line = 0;
};

/// Flat `key = value` text. `#` starts a comment line; blank lines are
/// ignored; a key may appear once. Throws ParseError with the line number.
std::vector<ConfigEntry> parse_config_text(std::string_view text);

/// Parses `[a, b, c]` (brackets optional) into trimmed items.
std::vector<std::string> parse_list(std::string_view value);

/// Builds F from `weights = [w0, w1, ...]` and optional `labels = [...]`.
/// Throws ConfigError.
stochastics::DiscreteDistribution distribution_from_config(std::string_view weights, std::string_view labels = {});

}  // namespace algoart
