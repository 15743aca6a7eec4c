#include <algorithm>
#include <cmath>
#include <numbers>

#include "algoart/errors.hpp"
#include "algoart/waves.hpp"

namespace algoart::waves {

WaveComponentSet synthesize_components(const DirectionalSpectrum& sp, stochastics::RandomStream& stream) {
    sp.validate();
    const auto df = cell_widths(sp.freqs);
    const auto dth = cell_widths(sp.dirs);
    const stochastics::UniformRange phase_range{0.0, 2.0 * std::numbers::pi};
    const std::size_t n_dirs = sp.dirs.size();

    WaveComponentSet cs;
    cs.n_freqs = sp.freqs.size();
    cs.n_dirs = n_dirs;
    cs.components.reserve(cs.n_freqs * n_dirs);
    for (std::size_t i = 0; i < cs.n_freqs; ++i) {
        const double split = std::min(df[i], sp.freqs[i]);
        for (std::size_t j = 0; j < n_dirs; ++j) {
            WaveComponent c;
            const double offset = (static_cast<double>(j) + 0.5) / static_cast<double>(n_dirs) - 0.5;
            const double f = sp.freqs[i] + split * offset;
            c.amplitude = std::sqrt(2.0 * sp.at(i, j) * df[i] * dth[j]);
            c.omega = 2.0 * std::numbers::pi * f;
            c.wavenumber = c.omega * c.omega / kGravity;
            c.direction = sp.dirs[j];
            c.phase = stochastics::sample_uniform(stream, phase_range);
            cs.components.push_back(c);
        }
    }
    return cs;
}

double evaluate_point(const WaveComponentSet& cs, double x, double y, double t) {
    double h = 0.0;
    for (const auto& c : cs.components) {
        const double along = x * std::cos(c.direction) + y * std::sin(c.direction);
        h += c.amplitude * std::cos(c.wavenumber * along - c.omega * t + c.phase);
    }
    return h;
}

std::vector<double> evaluate_rows(const WaveComponentSet& cs, std::size_t row_begin, std::size_t row_end,
                                  std::size_t cols, double spacing, double t) {
    std::vector<double> out;
    out.reserve((row_end - row_begin) * cols);
    for (std::size_t r = row_begin; r < row_end; ++r) {
        const double y = static_cast<double>(r) * spacing;
        for (std::size_t c = 0; c < cols; ++c) {
            out.push_back(evaluate_point(cs, static_cast<double>(c) * spacing, y, t));
        }
    }
    return out;
}

HeightField evaluate_field(const WaveComponentSet& cs, std::size_t rows, std::size_t cols, double spacing, double t) {
    if (rows < 1 || cols < 1) {
        throw ConfigError("height field needs at least one row and one column");
    }
    HeightField hf;
    hf.rows = rows;
    hf.cols = cols;
    hf.spacing = spacing;
    hf.t = t;
    hf.h = evaluate_rows(cs, 0, rows, cols, spacing, t);
    return hf;
}

std::int32_t normalize_value(double h, double h_ref) {
    const double scaled = h * static_cast<double>(kDisplayMax) / h_ref;
    if (scaled >= kDisplayMax) {
        return kDisplayMax;
    }
    if (scaled <= -kDisplayMax) {
        return -kDisplayMax;
    }
    return static_cast<std::int32_t>(std::lround(scaled));
}

DisplayMatrix normalize_display(const HeightField& hf, double h_ref) {
    if (!(h_ref > 0.0) || !std::isfinite(h_ref)) {
        throw ConfigError("display reference height must be positive");
    }
    DisplayMatrix dm;
    dm.rows = hf.rows;
    dm.cols = hf.cols;
    dm.scale = h_ref / kDisplayMax;
    dm.values.reserve(hf.h.size());
    for (double h : hf.h) {
        dm.values.push_back(normalize_value(h, h_ref));
    }
    return dm;
}

}  // namespace algoart::waves
