#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "algoart/stochastics.hpp"

namespace algoart::waves {

inline constexpr double kGravity = 9.81;  // m/s^2

// ---------------------------------------------------------------------------
// Korteweg-de Vries: u_t + 6 u u_x + u_xxx = 0 on a periodic grid.

struct Grid1D {
    std::size_t n = 512;
    double dx = 40.0 / 512.0;
    bool periodic = true;

    double length() const { return static_cast<double>(n) * dx; }
    double x(std::size_t i) const { return static_cast<double>(i) * dx; }

    /// Throws ConfigError unless n >= 8, dx > 0 and the grid is periodic.
    void validate() const;
};

struct KdvState {
    Grid1D grid;
    std::vector<double> u;
    double t = 0.0;

    /// Previous time level for the leapfrog scheme; empty until the first step.
    std::vector<double> u_prev;
    double prev_dt = 0.0;

    static KdvState from_profile(Grid1D grid, std::vector<double> u, double t = 0.0);
};

/// Largest dt accepted by kdv_step for the given amplitude:
/// dx^3 / (4 + 6 dx^2 max|u|).
double kdv_stable_dt(const Grid1D& grid, double max_abs_u);

/// One Zabusky-Kruskal leapfrog step. The first step (or any step whose dt
/// differs from the previous one) starts from a forward-Euler half step
/// followed by a midpoint step.
///
/// Throws NumericalError when dt exceeds kdv_stable_dt for the current
/// amplitude or when the new profile contains non-finite values.
KdvState kdv_step(const KdvState& state, double dt);

struct KdvInvariants {
    double mass = 0.0;      ///< sum u dx
    double momentum = 0.0;  ///< sum u^2 dx
};

KdvInvariants kdv_invariants(const KdvState& state);

/// (c/2) sech^2(sqrt(c)/2 (x - x0 - c t)), using the nearest periodic image.
std::vector<double> kdv_soliton_profile(const Grid1D& grid, double c, double x0, double t = 0.0);

// ---------------------------------------------------------------------------
// Directional spectra

struct DirectionalSpectrum {
    std::vector<double> freqs;  ///< Hz, strictly ascending, > 0
    std::vector<double> dirs;   ///< rad, strictly ascending, in [0, 2 pi)
    std::vector<double> s;      ///< row-major [freq][dir], m^2/(Hz rad)
    std::string station;
    std::string month;  ///< YYYY-MM
    std::optional<double> hs_reported;

    double at(std::size_t i, std::size_t j) const { return s[i * dirs.size() + j]; }

    /// Throws ConfigError on any invariant violation.
    void validate() const;
};

/// Parses the line-oriented spectrum format. Errors are ParseError with the
/// offending line number.
DirectionalSpectrum parse_spectrum(std::string_view text);

/// Canonical text form accepted by parse_spectrum (values with 9 significant decimals).
std::string spectrum_to_text(const DirectionalSpectrum& sp);

/// Midpoint cell widths with half cells at both ends. A single-point axis
/// gets a unit width.
std::vector<double> cell_widths(std::span<const double> axis);

/// m0 = sum_ij S_ij df_i dtheta_j.
double spectral_moment_m0(const DirectionalSpectrum& sp);

/// Hs = 4 sqrt(m0).
double significant_height(double m0);

// ---------------------------------------------------------------------------
// Linear random-phase synthesis

struct WaveComponent {
    double amplitude = 0.0;  ///< m
    double wavenumber = 0.0; ///< rad/m, deep water: omega^2 / g
    double direction = 0.0;  ///< rad
    double omega = 0.0;      ///< rad/s
    double phase = 0.0;      ///< rad
};

struct WaveComponentSet {
    std::size_t n_freqs = 0;
    std::size_t n_dirs = 0;
    std::vector<WaveComponent> components;  ///< row-major [freq][dir]
};

/// a_ij = sqrt(2 S_ij df_i dtheta_j); phases uniform in [0, 2 pi) drawn
/// row-major, one draw per component.
///
/// The components of one frequency bin do not share a frequency: component
/// (i, j) of J directions sits at f_i + w_i ((j + 1/2)/J - 1/2) with
/// w_i = min(df_i, f_i). With a single direction this is exactly f_i. Equal
/// frequencies across directions would sum coherently at a fixed point and
/// make the point's time variance a random quantity instead of m0.
WaveComponentSet synthesize_components(const DirectionalSpectrum& sp, stochastics::RandomStream& stream);

struct HeightField {
    std::size_t rows = 0;
    std::size_t cols = 0;
    double spacing = 1.0;  ///< m per cell
    double t = 0.0;        ///< s
    std::vector<double> h; ///< row-major elevations, m

    double at(std::size_t r, std::size_t c) const { return h[r * cols + c]; }
};

/// Surface elevation at (x, y, t); components summed in storage order.
double evaluate_point(const WaveComponentSet& cs, double x, double y, double t);

/// h[r][c] at x = c * spacing, y = r * spacing.
HeightField evaluate_field(const WaveComponentSet& cs, std::size_t rows, std::size_t cols, double spacing, double t);

/// Rows [row_begin, row_end) of the field evaluate_field would produce, in
/// the same order (bit-identical values).
std::vector<double> evaluate_rows(const WaveComponentSet& cs, std::size_t row_begin, std::size_t row_end,
                                  std::size_t cols, double spacing, double t);

// ---------------------------------------------------------------------------
// Numeric display

inline constexpr std::int32_t kDisplayMax = 999'999;

struct DisplayMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int32_t> values;
    double scale = 1.0;  ///< meters per display unit

    std::int32_t at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

/// round(h / h_ref * 999999), halves away from zero, clamped to +-999999.
std::int32_t normalize_value(double h, double h_ref);

/// Throws ConfigError for h_ref <= 0.
DisplayMatrix normalize_display(const HeightField& hf, double h_ref);

}  // namespace algoart::waves
