#include "algoart/run_config.hpp"

#include <set>

#include "algoart/errors.hpp"
#include "algoart/text_format.hpp"

namespace algoart {

std::vector<ConfigEntry> parse_config_text(std::string_view text) {
    std::vector<ConfigEntry> out;
    std::set<std::string, std::less<>> seen;
    const auto lines = split_lines(text);
    for (std::size_t idx = 0; idx < lines.size(); ++idx) {
        const std::size_t ln = idx + 1;
        const auto line = trim(lines[idx]);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(ln, "expected 'key = value'");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ParseError(ln, "empty key");
        }
        for (char ch : key) {
            const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') ||
                            ch == '_' || ch == '-';
            if (!ok) {
                throw ParseError(ln, "invalid key '" + std::string(key) + "'");
            }
        }
        if (!seen.emplace(key).second) {
            throw ParseError(ln, "key '" + std::string(key) + "' given twice");
        }
        out.push_back({std::string(key), std::string(value), ln});
    }
    return out;
}

std::vector<std::string> parse_list(std::string_view value) {
    value = trim(value);
    if (!value.empty() && value.front() == '[') {
        if (value.back() != ']') {
            throw ConfigError("unterminated list '" + std::string(value) + "'");
        }
        value = value.substr(1, value.size() - 2);
    }
    std::vector<std::string> out;
    for (auto item : split_trimmed(value, ',')) {
        if (item.empty()) {
            throw ConfigError("empty list item in '" + std::string(value) + "'");
        }
        out.emplace_back(item);
    }
    return out;
}

stochastics::DiscreteDistribution distribution_from_config(std::string_view weights, std::string_view labels) {
    std::vector<double> w;
    for (const auto& item : parse_list(weights)) {
        double v = 0.0;
        if (!parse_double(item, v)) {
            throw ConfigError("invalid weight '" + item + "'");
        }
        w.push_back(v);
    }
    std::vector<std::string> l;
    if (!trim(labels).empty()) {
        l = parse_list(labels);
    }
    return stochastics::DiscreteDistribution(std::move(w), std::move(l));
}

}  // namespace algoart
