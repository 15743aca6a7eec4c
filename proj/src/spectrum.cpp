#include <cmath>
#include <numbers>
#include <sstream>

#include "algoart/errors.hpp"
#include "algoart/text_format.hpp"
#include "algoart/waves.hpp"

namespace algoart::waves {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool valid_month(std::string_view m) {
    if (m.size() != 7 || m[4] != '-') {
        return false;
    }
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u}) {
        if (m[i] < '0' || m[i] > '9') {
            return false;
        }
    }
    const int month = (m[5] - '0') * 10 + (m[6] - '0');
    return month >= 1 && month <= 12;
}

std::vector<double> parse_numbers(std::string_view text, std::size_t line, const char* what) {
    std::vector<double> out;
    for (auto tok : split_ws(text)) {
        double v = 0.0;
        if (!parse_double(tok, v)) {
            throw ParseError(line, std::string("invalid number '") + std::string(tok) + "' in " + what);
        }
        out.push_back(v);
    }
    return out;
}

void check_ascending(const std::vector<double>& axis, std::size_t line, const char* name) {
    if (axis.empty()) {
        throw ParseError(line, std::string(name) + " must list at least one value");
    }
    for (std::size_t i = 1; i < axis.size(); ++i) {
        if (!(axis[i] > axis[i - 1])) {
            throw ParseError(line, std::string(name) + " must be strictly ascending (value " + std::to_string(i) +
                                       ")");
        }
    }
}

std::string format_value(double v) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(9);
    os << v;
    return os.str();
}

}  // namespace

void DirectionalSpectrum::validate() const {
    if (freqs.empty() || dirs.empty()) {
        throw ConfigError("spectrum axes must not be empty");
    }
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        if (!(freqs[i] > 0.0) || !std::isfinite(freqs[i]) || (i > 0 && !(freqs[i] > freqs[i - 1]))) {
            throw ConfigError("frequencies must be positive and strictly ascending");
        }
    }
    for (std::size_t j = 0; j < dirs.size(); ++j) {
        if (!(dirs[j] >= 0.0) || !(dirs[j] < kTwoPi) || (j > 0 && !(dirs[j] > dirs[j - 1]))) {
            throw ConfigError("directions must lie in [0, 2pi) and be strictly ascending");
        }
    }
    if (s.size() != freqs.size() * dirs.size()) {
        throw ConfigError("spectrum matrix dimensions do not match its axes");
    }
    for (double v : s) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw ConfigError("spectral density must be finite and non-negative");
        }
    }
    if (hs_reported && !(*hs_reported >= 0.0)) {
        throw ConfigError("reported significant height must be non-negative");
    }
}

DirectionalSpectrum parse_spectrum(std::string_view text) {
    DirectionalSpectrum sp;
    bool have_station = false;
    bool have_month = false;
    bool have_freqs = false;
    bool have_dirs = false;
    std::size_t rows_read = 0;

    const auto lines = split_lines(text);
    for (std::size_t idx = 0; idx < lines.size(); ++idx) {
        const std::size_t ln = idx + 1;
        const auto line = trim(lines[idx]);
        if (line.empty() || line.front() == '#') {
            continue;
        }

        const auto colon = line.find(':');
        if (colon != std::string_view::npos) {
            if (rows_read > 0) {
                throw ParseError(ln, "header line after matrix rows");
            }
            const auto key = trim(line.substr(0, colon));
            const auto value = trim(line.substr(colon + 1));
            if (key == "station") {
                if (value.empty()) {
                    throw ParseError(ln, "station label is empty");
                }
                sp.station = std::string(value);
                have_station = true;
            } else if (key == "month") {
                if (!valid_month(value)) {
                    throw ParseError(ln, "month must be YYYY-MM, got '" + std::string(value) + "'");
                }
                sp.month = std::string(value);
                have_month = true;
            } else if (key == "hs_reported") {
                auto toks = split_ws(value);
                double hs = 0.0;
                if (toks.empty() || toks.size() > 2 || (toks.size() == 2 && toks[1] != "m") ||
                    !parse_double(toks[0], hs) || hs < 0.0) {
                    throw ParseError(ln, "hs_reported must be '<non-negative float> m'");
                }
                sp.hs_reported = hs;
            } else if (key == "freqs_hz") {
                sp.freqs = parse_numbers(value, ln, "freqs_hz");
                check_ascending(sp.freqs, ln, "freqs_hz");
                if (!(sp.freqs.front() > 0.0)) {
                    throw ParseError(ln, "frequencies must be positive");
                }
                have_freqs = true;
            } else if (key == "dirs_rad") {
                sp.dirs = parse_numbers(value, ln, "dirs_rad");
                check_ascending(sp.dirs, ln, "dirs_rad");
                if (sp.dirs.front() < 0.0 || !(sp.dirs.back() < kTwoPi)) {
                    throw ParseError(ln, "directions must lie in [0, 2pi)");
                }
                have_dirs = true;
            } else {
                throw ParseError(ln, "unknown header key '" + std::string(key) + "'");
            }
            continue;
        }

        if (!have_freqs || !have_dirs) {
            throw ParseError(ln, "matrix row before freqs_hz and dirs_rad");
        }
        if (rows_read >= sp.freqs.size()) {
            throw ParseError(ln, "more matrix rows than frequencies (" + std::to_string(sp.freqs.size()) + ")");
        }
        auto row = parse_numbers(line, ln, "matrix row");
        if (row.size() != sp.dirs.size()) {
            throw ParseError(ln, "matrix row " + std::to_string(rows_read) + " has " + std::to_string(row.size()) +
                                     " values, expected " + std::to_string(sp.dirs.size()));
        }
        for (double v : row) {
            if (v < 0.0) {
                throw ParseError(ln, "negative spectral density in matrix row " + std::to_string(rows_read));
            }
        }
        sp.s.insert(sp.s.end(), row.begin(), row.end());
        ++rows_read;
    }

    const std::size_t end_line = lines.size();
    if (!have_station) {
        throw ParseError(end_line, "missing 'station:' header");
    }
    if (!have_month) {
        throw ParseError(end_line, "missing 'month:' header");
    }
    if (!have_freqs || !have_dirs) {
        throw ParseError(end_line, "missing 'freqs_hz:' or 'dirs_rad:' header");
    }
    if (rows_read != sp.freqs.size()) {
        throw ParseError(end_line, "expected " + std::to_string(sp.freqs.size()) + " matrix rows, found " +
                                       std::to_string(rows_read));
    }
    return sp;
}

std::string spectrum_to_text(const DirectionalSpectrum& sp) {
    std::string out;
    out += "station: " + sp.station + "\n";
    out += "month: " + sp.month + "\n";
    if (sp.hs_reported) {
        out += "hs_reported: " + format_fixed(*sp.hs_reported, 3) + " m\n";
    }
    auto axis_line = [&](const char* key, const std::vector<double>& axis) {
        out += key;
        out += ':';
        for (double v : axis) {
            out += ' ' + format_value(v);
        }
        out += '\n';
    };
    axis_line("freqs_hz", sp.freqs);
    axis_line("dirs_rad", sp.dirs);
    for (std::size_t i = 0; i < sp.freqs.size(); ++i) {
        for (std::size_t j = 0; j < sp.dirs.size(); ++j) {
            if (j > 0) {
                out += ' ';
            }
            out += format_value(sp.at(i, j));
        }
        out += '\n';
    }
    return out;
}

std::vector<double> cell_widths(std::span<const double> axis) {
    const std::size_t n = axis.size();
    std::vector<double> w(n, 1.0);
    if (n < 2) {
        return w;
    }
    w[0] = (axis[1] - axis[0]) / 2.0;
    w[n - 1] = (axis[n - 1] - axis[n - 2]) / 2.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        w[i] = (axis[i + 1] - axis[i - 1]) / 2.0;
    }
    return w;
}

double spectral_moment_m0(const DirectionalSpectrum& sp) {
    const auto df = cell_widths(sp.freqs);
    const auto dth = cell_widths(sp.dirs);
    double m0 = 0.0;
    for (std::size_t i = 0; i < sp.freqs.size(); ++i) {
        for (std::size_t j = 0; j < sp.dirs.size(); ++j) {
            m0 += sp.at(i, j) * df[i] * dth[j];
        }
    }
    return m0;
}

double significant_height(double m0) { return 4.0 * std::sqrt(m0); }

}  // namespace algoart::waves
