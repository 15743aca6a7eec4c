#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "algoart/errors.hpp"
#include "algoart/waves.hpp"
#include "support.hpp"

using namespace algoart;
using namespace algoart::waves;
using stochastics::rng_new;
using stochastics::Seed;

namespace {

const char* kMinimal =
    "station: test\n"
    "month: 2020-01\n"
    "freqs_hz: 0.1\n"
    "dirs_rad: 0\n"
    "0\n";

std::size_t parse_error_line(const std::string& text) {
    try {
        parse_spectrum(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

std::string parse_error_message(const std::string& text) {
    try {
        parse_spectrum(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST(ParseSpectrum, Minimal) {
    const auto sp = parse_spectrum(kMinimal);
    EXPECT_EQ(sp.station, "test");
    EXPECT_EQ(sp.month, "2020-01");
    EXPECT_FALSE(sp.hs_reported.has_value());
    ASSERT_EQ(sp.s.size(), 1U);
    EXPECT_EQ(spectral_moment_m0(sp), 0.0);
    EXPECT_EQ(significant_height(0.0), 0.0);
}

TEST(ParseSpectrum, CommentsBlankLinesAndCrlf) {
    const auto sp = parse_spectrum(
        "# header comment\r\n\r\nstation: a b c\r\nmonth: 1999-12\r\nhs_reported: 1.5 m\r\n"
        "freqs_hz: 0.1 0.2\r\ndirs_rad: 0 3.14\r\n# rows\r\n1 2\r\n3 4\r\n");
    EXPECT_EQ(sp.station, "a b c");
    EXPECT_EQ(*sp.hs_reported, 1.5);
    EXPECT_EQ(sp.at(1, 0), 3.0);
}

TEST(ParseSpectrum, ShortRowNamesTheRow) {
    const std::string text =
        "station: x\nmonth: 2014-02\nfreqs_hz: 0.1 0.2\ndirs_rad: 0 1 2\n1 2 3\n4 5\n";
    EXPECT_EQ(parse_error_line(text), 6U);
    EXPECT_NE(parse_error_message(text).find("matrix row 1 has 2 values, expected 3"), std::string::npos);
}

TEST(ParseSpectrum, LineNumberedErrors) {
    // non-ascending frequencies
    EXPECT_EQ(parse_error_line("station: x\nmonth: 2014-02\nfreqs_hz: 0.2 0.1\n"), 3U);
    // directions outside [0, 2pi)
    EXPECT_EQ(parse_error_line("station: x\nmonth: 2014-02\nfreqs_hz: 0.1\ndirs_rad: 6.3\n"), 4U);
    // negative density
    EXPECT_EQ(parse_error_line("station: x\nmonth: 2014-02\nfreqs_hz: 0.1\ndirs_rad: 0\n-1\n"), 5U);
    // unknown key
    EXPECT_EQ(parse_error_line("station: x\ncolour: red\n"), 2U);
    // bad month
    EXPECT_EQ(parse_error_line("station: x\nmonth: 2014-13\n"), 2U);
    // row before axes
    EXPECT_EQ(parse_error_line("station: x\nmonth: 2014-02\n1 2\n"), 3U);
    // malformed number
    EXPECT_EQ(parse_error_line("station: x\nmonth: 2014-02\nfreqs_hz: 0.1 abc\n"), 3U);
    // too many rows
    EXPECT_EQ(parse_error_line("station: x\nmonth: 2014-02\nfreqs_hz: 0.1\ndirs_rad: 0\n1\n2\n"), 6U);
    // header after the matrix
    EXPECT_EQ(parse_error_line("station: x\nfreqs_hz: 0.1\ndirs_rad: 0\n1\nmonth: 2014-02\n"), 5U);
    // bad hs_reported
    EXPECT_EQ(parse_error_line("station: x\nhs_reported: 2 ft\n"), 2U);
}

TEST(ParseSpectrum, MissingPiecesReported) {
    EXPECT_THROW(parse_spectrum(""), ParseError);
    EXPECT_THROW(parse_spectrum("station: x\nmonth: 2014-02\nfreqs_hz: 0.1 0.2\ndirs_rad: 0\n1\n"), ParseError);
    EXPECT_THROW(parse_spectrum("month: 2014-02\nfreqs_hz: 0.1\ndirs_rad: 0\n1\n"), ParseError);
}

TEST(ParseSpectrum, TextRoundTrip) {
    const auto sp = parse_spectrum(testsupport::spectrum_text());
    const auto again = parse_spectrum(spectrum_to_text(sp));
    EXPECT_EQ(again.freqs, sp.freqs);
    EXPECT_EQ(again.dirs, sp.dirs);
    EXPECT_EQ(again.s, sp.s);
    EXPECT_EQ(again.station, sp.station);
    EXPECT_EQ(again.month, sp.month);
}

TEST(BundledSpectrum, MetadataAndHs) {
    const auto sp = parse_spectrum(testsupport::spectrum_text());
    EXPECT_EQ(sp.month, "2014-02");
    EXPECT_NE(sp.station.find("Pierres Noires"), std::string::npos);
    EXPECT_GE(sp.freqs.size() * sp.dirs.size(), 200U);
    ASSERT_TRUE(sp.hs_reported.has_value());
    const double hs = significant_height(spectral_moment_m0(sp));
    EXPECT_LT(std::abs(hs - *sp.hs_reported) / *sp.hs_reported, 0.02);
}

TEST(CellWidths, MidpointRuleWithHalfCells) {
    const std::vector<double> axis{0.0, 1.0, 3.0, 6.0};
    EXPECT_EQ(cell_widths(axis), (std::vector<double>{0.5, 1.5, 2.5, 1.5}));
    const std::vector<double> single{0.3};
    EXPECT_EQ(cell_widths(single), (std::vector<double>{1.0}));
}

TEST(SpectralMoment, SingleCell) {
    // Two frequencies 1 Hz apart give half-cell widths of 0.5 Hz; one direction has width 1 rad.
    const auto sp = parse_spectrum("station: x\nmonth: 2000-01\nfreqs_hz: 0.1 1.1\ndirs_rad: 0\n2\n0\n");
    EXPECT_DOUBLE_EQ(spectral_moment_m0(sp), 1.0);
    EXPECT_DOUBLE_EQ(significant_height(spectral_moment_m0(sp)), 4.0);
}

TEST(Synthesis, ZeroSpectrumZeroAmplitudes) {
    const auto sp = parse_spectrum("station: x\nmonth: 2000-01\nfreqs_hz: 0.1 0.2\ndirs_rad: 0 1\n0 0\n0 0\n");
    auto stream = rng_new(Seed{0});
    const auto cs = synthesize_components(sp, stream);
    ASSERT_EQ(cs.components.size(), 4U);
    for (const auto& c : cs.components) {
        EXPECT_EQ(c.amplitude, 0.0);
    }
    const auto hf = evaluate_field(cs, 3, 3, 5.0, 2.0);
    for (double h : hf.h) {
        EXPECT_EQ(h, 0.0);
    }
}

TEST(Synthesis, AmplitudeDispersionAndPhases) {
    const auto sp = parse_spectrum("station: x\nmonth: 2000-01\nfreqs_hz: 0.1 1.1\ndirs_rad: 0\n2\n0\n");
    auto stream = rng_new(Seed{4});
    const auto cs = synthesize_components(sp, stream);
    const auto& c = cs.components[0];
    EXPECT_DOUBLE_EQ(c.amplitude, std::sqrt(2.0 * 2.0 * 0.5 * 1.0));
    // A single direction keeps the bin frequency exactly.
    EXPECT_DOUBLE_EQ(c.omega, 2.0 * std::numbers::pi * 0.1);
    EXPECT_DOUBLE_EQ(c.wavenumber, c.omega * c.omega / 9.81);
    EXPECT_EQ(stream.draws(), 2U);
}

TEST(Synthesis, BundledComponentsInvariants) {
    const auto sp = parse_spectrum(testsupport::spectrum_text());
    auto stream = rng_new(Seed{0});
    const auto cs = synthesize_components(sp, stream);
    ASSERT_EQ(cs.components.size(), sp.freqs.size() * sp.dirs.size());
    const auto df = cell_widths(sp.freqs);
    const auto dth = cell_widths(sp.dirs);
    double energy = 0.0;
    for (std::size_t i = 0; i < cs.n_freqs; ++i) {
        for (std::size_t j = 0; j < cs.n_dirs; ++j) {
            const auto& c = cs.components[i * cs.n_dirs + j];
            EXPECT_GE(c.amplitude, 0.0);
            EXPECT_GE(c.phase, 0.0);
            EXPECT_LT(c.phase, 2.0 * std::numbers::pi);
            EXPECT_EQ(c.direction, sp.dirs[j]);
            EXPECT_DOUBLE_EQ(c.wavenumber, c.omega * c.omega / kGravity);
            // Component frequency stays inside the bin's cell.
            const double f = c.omega / (2.0 * std::numbers::pi);
            EXPECT_LE(std::abs(f - sp.freqs[i]), 0.5 * df[i] + 1e-15);
            EXPECT_NEAR(c.amplitude, std::sqrt(2.0 * sp.at(i, j) * df[i] * dth[j]), 1e-15);
            energy += c.amplitude * c.amplitude / 2.0;
        }
    }
    EXPECT_NEAR(energy, spectral_moment_m0(sp), 1e-12);
}

TEST(Synthesis, DeterministicPhases) {
    const auto sp = parse_spectrum(testsupport::spectrum_text());
    auto a = rng_new(Seed{12});
    auto b = rng_new(Seed{12});
    const auto ca = synthesize_components(sp, a);
    const auto cb = synthesize_components(sp, b);
    for (std::size_t k = 0; k < ca.components.size(); ++k) {
        ASSERT_EQ(ca.components[k].phase, cb.components[k].phase);
    }
}

TEST(EvaluateField, SingleComponentAtOrigin) {
    WaveComponentSet cs;
    cs.n_freqs = cs.n_dirs = 1;
    cs.components.push_back({1.75, 0.3, 0.4, 0.9, 0.0});
    const auto hf = evaluate_field(cs, 2, 2, 1.0, 0.0);
    EXPECT_EQ(hf.at(0, 0), 1.75);
    EXPECT_NEAR(hf.at(0, 1), 1.75 * std::cos(0.3 * std::cos(0.4)), 1e-15);
}

TEST(EvaluateField, EmptySetIsZero) {
    const auto hf = evaluate_field(WaveComponentSet{}, 4, 5, 2.0, 1.0);
    EXPECT_EQ(hf.h.size(), 20U);
    for (double h : hf.h) {
        EXPECT_EQ(h, 0.0);
    }
    EXPECT_THROW(evaluate_field(WaveComponentSet{}, 0, 5, 2.0, 1.0), ConfigError);
}

TEST(EvaluateField, RowsAreBitIdenticalSlices) {
    const auto sp = parse_spectrum(testsupport::spectrum_text());
    auto stream = rng_new(Seed{0});
    const auto cs = synthesize_components(sp, stream);
    const auto hf = evaluate_field(cs, 8, 6, 4.0, 3.5);
    const auto rows = evaluate_rows(cs, 3, 5, 6, 4.0, 3.5);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        ASSERT_EQ(rows[k], hf.h[3 * 6 + k]);
    }
    EXPECT_EQ(evaluate_field(cs, 8, 6, 4.0, 3.5).h, hf.h);
}

TEST(EvaluateField, SpatialMeanWithinThreeStandardErrors) {
    const auto sp = parse_spectrum(testsupport::spectrum_text());
    auto stream = rng_new(Seed{0});
    const auto cs = synthesize_components(sp, stream);
    const std::size_t n = 96;
    const double spacing = 10.0;
    const auto hf = evaluate_field(cs, n, n, spacing, 0.0);
    double mean = 0.0;
    for (double h : hf.h) {
        mean += h;
    }
    mean /= static_cast<double>(hf.h.size());
    // Under random phases the field mean has variance sum(a^2 / 2 |<e^{i k.x}>|^2).
    double var = 0.0;
    for (const auto& c : cs.components) {
        std::complex<double> avg{0.0, 0.0};
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t col = 0; col < n; ++col) {
                const double along = col * spacing * std::cos(c.direction) + r * spacing * std::sin(c.direction);
                avg += std::polar(1.0, c.wavenumber * along);
            }
        }
        avg /= static_cast<double>(n * n);
        var += c.amplitude * c.amplitude / 2.0 * std::norm(avg);
    }
    EXPECT_LT(std::abs(mean), 3.0 * std::sqrt(var));
}

TEST(Normalize, StatedValues) {
    EXPECT_EQ(normalize_value(0.0, 10.0), 0);
    EXPECT_EQ(normalize_value(10.0, 10.0), 999999);
    EXPECT_EQ(normalize_value(-10.0, 10.0), -999999);
    EXPECT_EQ(normalize_value(3.2, 10.0), 320000);
    EXPECT_EQ(normalize_value(25.0, 10.0), 999999);
    EXPECT_EQ(normalize_value(-1e9, 10.0), -999999);
}

TEST(Normalize, HalfAwayFromZero) {
    // 0.5 / 999999 of h_ref scales to exactly one half unit.
    const double h_ref = 999999.0;
    EXPECT_EQ(normalize_value(0.5, h_ref), 1);
    EXPECT_EQ(normalize_value(-0.5, h_ref), -1);
    EXPECT_EQ(normalize_value(1.5, h_ref), 2);
}

TEST(Normalize, MonotoneAndOdd) {
    auto stream = rng_new(Seed{21});
    std::vector<double> hs;
    for (int i = 0; i < 20000; ++i) {
        hs.push_back(stochastics::sample_uniform(stream, {-30.0, 30.0}));
    }
    std::sort(hs.begin(), hs.end());
    for (std::size_t i = 0; i < hs.size(); ++i) {
        const auto v = normalize_value(hs[i], 10.0);
        EXPECT_EQ(normalize_value(-hs[i], 10.0), -v);
        EXPECT_LE(std::abs(v), kDisplayMax);
        if (i > 0) {
            EXPECT_LE(normalize_value(hs[i - 1], 10.0), v);
        }
    }
}

TEST(Normalize, DisplayMatrix) {
    HeightField hf{1, 3, 1.0, 0.0, {-2.0, 0.0, 2.0}};
    const auto dm = normalize_display(hf, 2.0);
    EXPECT_EQ(dm.values, (std::vector<std::int32_t>{-999999, 0, 999999}));
    EXPECT_DOUBLE_EQ(dm.scale, 2.0 / 999999);
    EXPECT_THROW(normalize_display(hf, 0.0), ConfigError);
    EXPECT_THROW(normalize_display(hf, -1.0), ConfigError);
}
