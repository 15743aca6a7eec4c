#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "algoart/errors.hpp"
#include "algoart/graphics.hpp"
#include "algoart/render.hpp"
#include "support.hpp"

using namespace algoart;
using namespace algoart::graphics;
using stochastics::DiscreteDistribution;
using stochastics::rng_new;
using stochastics::Seed;

namespace {

constexpr double kEps = 1e-9;

bool inside(const Point& p, const Rect& r) {
    return p.x >= r.x - kEps && p.x <= r.x + r.width + kEps && p.y >= r.y - kEps && p.y <= r.y + r.height + kEps;
}

// Squared distance from a + t (b - a) to the closed square [x0, x0 + c] x [y0, y0 + c].
double point_cell_sq(double t, Point a, Point b, double x0, double y0, double c) {
    const double px = a.x + t * (b.x - a.x);
    const double py = a.y + t * (b.y - a.y);
    const double dx = std::max(0.0, std::max(x0 - px, px - (x0 + c)));
    const double dy = std::max(0.0, std::max(y0 - py, py - (y0 + c)));
    return dx * dx + dy * dy;
}

// Brute-force raster: every cell against every segment; the distance along
// the segment is convex in t, so ternary search finds its minimum.
double brute_coverage(const VectorScene& scene, double res) {
    const int nx = static_cast<int>(std::ceil(scene.canvas_w * res));
    const int ny = static_cast<int>(std::ceil(scene.canvas_h * res));
    const double c = 1.0 / res;
    int hit = 0;
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const double x0 = i * c;
            const double y0 = j * c;
            bool any = false;
            for (const auto& s : scene.strokes) {
                const double r2 = s.pen_width * s.pen_width / 4;
                for (std::size_t k = 0; k + 1 < s.points.size() && !any; ++k) {
                    const auto a = s.points[k];
                    const auto b = s.points[k + 1];
                    double lo = 0.0;
                    double hi = 1.0;
                    for (int it = 0; it < 200; ++it) {
                        const double m1 = lo + (hi - lo) / 3;
                        const double m2 = hi - (hi - lo) / 3;
                        if (point_cell_sq(m1, a, b, x0, y0, c) <= point_cell_sq(m2, a, b, x0, y0, c)) {
                            hi = m2;
                        } else {
                            lo = m1;
                        }
                    }
                    const double d = std::min({point_cell_sq(lo, a, b, x0, y0, c), point_cell_sq(0.0, a, b, x0, y0, c),
                                               point_cell_sq(1.0, a, b, x0, y0, c)});
                    any = d < r2;
                }
                if (any) {
                    break;
                }
            }
            hit += any ? 1 : 0;
        }
    }
    return static_cast<double>(hit) / (nx * ny);
}

VectorScene superposed_runs(std::uint64_t seed, int k) {
    auto stream = rng_new(Seed{seed});
    const auto cfg = HatchConfig::uniform_recoding();
    std::vector<VectorScene> runs;
    for (int i = 0; i < k; ++i) {
        runs.push_back(generate_hatchwork(cfg, stream).scene);
    }
    return superpose(runs);
}

}  // namespace

TEST(ClassifyDirection, ModuloHalfTurn) {
    EXPECT_EQ(classify_direction(0), HatchDirection::horizontal);
    EXPECT_EQ(classify_direction(180), HatchDirection::horizontal);
    EXPECT_EQ(classify_direction(90), HatchDirection::vertical);
    EXPECT_EQ(classify_direction(-90), HatchDirection::vertical);
    EXPECT_EQ(classify_direction(45), HatchDirection::oblique);
    EXPECT_EQ(classify_direction(135), HatchDirection::oblique);
}

TEST(HatchZoneStrokes, HorizontalEvenSpacing) {
    const HatchZone zone{{10, 20, 30, 40}, 4, 0.0, 1};
    const auto strokes = hatch_zone_strokes(zone, 0.5, 7);
    ASSERT_EQ(strokes.size(), 4U);
    // spacing 10, first line at 5
    const double ys[] = {25, 35, 45, 55};
    for (int i = 0; i < 4; ++i) {
        EXPECT_EQ(strokes[i].points[0], (Point{10, ys[i]}));
        EXPECT_EQ(strokes[i].points[1], (Point{40, ys[i]}));
        EXPECT_EQ(strokes[i].color, 1U);
        EXPECT_EQ(strokes[i].group, 7U);
    }
}

TEST(HatchZoneStrokes, VerticalEvenSpacing) {
    const HatchZone zone{{0, 0, 12, 5}, 3, 90.0, 0};
    const auto strokes = hatch_zone_strokes(zone, 0.5, 0);
    ASSERT_EQ(strokes.size(), 3U);
    EXPECT_EQ(strokes[0].points[0], (Point{2, 0}));
    EXPECT_EQ(strokes[1].points[0], (Point{6, 0}));
    EXPECT_EQ(strokes[2].points[1], (Point{10, 5}));
}

TEST(HatchZoneStrokes, ObliqueSquareDiagonals) {
    // 45 degrees across a unit square: normal extent is [-sqrt(0.5), sqrt(0.5)].
    const HatchZone zone{{0, 0, 1, 1}, 1, 45.0, 0};
    const auto strokes = hatch_zone_strokes(zone, 0.5, 0);
    ASSERT_EQ(strokes.size(), 1U);
    EXPECT_NEAR(strokes[0].points[0].x, 0.0, 1e-12);
    EXPECT_NEAR(strokes[0].points[0].y, 0.0, 1e-12);
    EXPECT_NEAR(strokes[0].points[1].x, 1.0, 1e-12);
    EXPECT_NEAR(strokes[0].points[1].y, 1.0, 1e-12);
}

TEST(ClipLine, HalfOpenEdgeOwnership) {
    const Rect r{0, 0, 10, 10};
    EXPECT_TRUE(clip_line_to_rect({0, 5}, {0, 1}, r).has_value());    // left edge owned
    EXPECT_FALSE(clip_line_to_rect({10, 5}, {0, 1}, r).has_value());  // right edge not
    EXPECT_TRUE(clip_line_to_rect({5, 0}, {1, 0}, r).has_value());    // bottom edge owned
    EXPECT_FALSE(clip_line_to_rect({5, 10}, {1, 0}, r).has_value());  // top edge not
    // Diagonal touching only the corner (10, 0).
    EXPECT_FALSE(clip_line_to_rect({10, 0}, {1, 1}, r).has_value());
    EXPECT_FALSE(clip_line_to_rect({0, 0}, {0, 0}, r).has_value());
}

TEST(ClipLine, DiagonalThroughCenter) {
    const auto seg = clip_line_to_rect({5, 5}, {1, 1}, {0, 0, 10, 10});
    ASSERT_TRUE(seg.has_value());
    EXPECT_NEAR(seg->first.x, 0, 1e-12);
    EXPECT_NEAR(seg->second.y, 10, 1e-12);
}

TEST(Hatchwork, DefaultRecodingShape) {
    auto stream = rng_new(Seed{0});
    const auto hw = generate_hatchwork(HatchConfig::uniform_recoding(), stream);
    EXPECT_EQ(hw.zones.size(), 20U);
    EXPECT_EQ(hw.scene.canvas_w, 192.0);
    EXPECT_EQ(hw.scene.canvas_h, 290.0);
    EXPECT_EQ(hw.scene.palette, (std::vector<std::string>{"black", "ochre"}));
    std::set<std::size_t> colors;
    for (const auto& z : hw.zones) {
        colors.insert(z.color);
    }
    EXPECT_EQ(colors.size(), 2U);
    // Seven draws per zone, in a fixed order.
    EXPECT_EQ(stream.draws(), 140U);
}

TEST(Hatchwork, SingleFixedHorizontalLine) {
    HatchConfig cfg;
    cfg.zone_count = 1;
    cfg.line_count = ParamSampler::fixed(1);
    cfg.direction = ParamSampler::fixed(0);
    auto stream = rng_new(Seed{3});
    const auto hw = generate_hatchwork(cfg, stream);
    ASSERT_EQ(hw.scene.strokes.size(), 1U);
    EXPECT_EQ(hw.scene.strokes[0].pen_width, cfg.pen_width);
}

TEST(Hatchwork, ZoneContainmentAndStrokeCount) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto stream = rng_new(Seed{seed});
        const auto hw = generate_hatchwork(HatchConfig::uniform_recoding(), stream);
        hw.scene.validate();
        std::vector<int> per_zone(hw.zones.size(), 0);
        for (const auto& s : hw.scene.strokes) {
            const auto& zone = hw.zones.at(s.group);
            ++per_zone[s.group];
            for (const auto& p : s.points) {
                ASSERT_TRUE(inside(p, zone.rect)) << "seed " << seed;
            }
        }
        for (std::size_t z = 0; z < hw.zones.size(); ++z) {
            const auto& r = hw.zones[z].rect;
            EXPECT_GE(hw.zones[z].line_count, 1);
            EXPECT_LE(r.x + r.width, 192.0);
            EXPECT_LE(r.y + r.height, 290.0);
            // Axis-parallel zones always emit all lines; oblique lines never miss the zone either.
            EXPECT_EQ(per_zone[z], hw.zones[z].line_count) << "seed " << seed << " zone " << z;
        }
    }
}

TEST(Hatchwork, LineCountRangeInclusive) {
    std::set<int> seen;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto stream = rng_new(Seed{seed});
        for (const auto& z : generate_hatchwork(HatchConfig::uniform_recoding(), stream).zones) {
            seen.insert(z.line_count);
        }
    }
    EXPECT_EQ(*seen.begin(), 2);
    EXPECT_EQ(*seen.rbegin(), 40);
}

TEST(Hatchwork, RejectsConfigsLeavingCanvas) {
    HatchConfig cfg;
    cfg.x = ParamSampler::uniform(-1, 100);
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = HatchConfig{};
    cfg.y = ParamSampler::uniform(0, 291);
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = HatchConfig{};
    cfg.x = ParamSampler::fixed(192);
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = HatchConfig{};
    cfg.width = ParamSampler::uniform(10, 300);
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = HatchConfig{};
    cfg.height = ParamSampler::uniform(0, 10);
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = HatchConfig{};
    cfg.line_count = ParamSampler::uniform(0.5, 4);
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = HatchConfig{};
    cfg.color = ParamSampler::discrete(DiscreteDistribution::uniform(3), {0, 1, 2});
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = HatchConfig{};
    cfg.zone_count = 0;
    EXPECT_THROW(cfg.validate(), ConfigError);
    EXPECT_NO_THROW(HatchConfig::uniform_recoding().validate());
}

TEST(Hatchwork, DeterministicScene) {
    auto a = rng_new(Seed{11});
    auto b = rng_new(Seed{11});
    const auto cfg = HatchConfig::uniform_recoding();
    EXPECT_EQ(generate_hatchwork(cfg, a).scene, generate_hatchwork(cfg, b).scene);
}

TEST(Hatchwork, GoldenDump) {
    auto stream = rng_new(Seed{0});
    const auto hw = generate_hatchwork(HatchConfig::uniform_recoding(), stream);
    testsupport::expect_golden("hatch_seed0.strokes.txt", render::scene_to_stroke_dump(hw.scene));
}

TEST(Coverage, EmptyAndFull) {
    VectorScene empty;
    EXPECT_EQ(coverage_fraction(empty, 1.0), 0.0);

    VectorScene full;
    full.canvas_w = 20;
    full.canvas_h = 10;
    full.strokes.push_back(PenStroke{{{0, 5}, {20, 5}}, 10.0, 0, 0});
    EXPECT_EQ(coverage_fraction(full, 1.0), 1.0);
    EXPECT_EQ(coverage_fraction(full, 4.0), 1.0);
    EXPECT_THROW(coverage_fraction(full, 0.0), ConfigError);
}

TEST(Coverage, TouchedCells) {
    // A horizontal stroke at y = 2.1 with pen 0.4 reaches y in (1.9, 2.3): rows 1 and 2 of a 1 mm raster.
    VectorScene s;
    s.canvas_w = 10;
    s.canvas_h = 4;
    s.strokes.push_back(PenStroke{{{0.5, 2.1}, {9.5, 2.1}}, 0.4, 0, 0});
    EXPECT_DOUBLE_EQ(coverage_fraction(s, 1.0), 20.0 / 40.0);
    // Grazing an edge does not count: y in (1.0, 2.0) stays inside row 1.
    s.strokes[0] = PenStroke{{{0.5, 1.5}, {9.5, 1.5}}, 1.0, 0, 0};
    EXPECT_DOUBLE_EQ(coverage_fraction(s, 1.0), 10.0 / 40.0);
    // Round caps: a point stroke touches the four cells around a grid corner.
    s.strokes[0] = PenStroke{{{5.0, 2.0}, {5.0, 2.0}}, 0.2, 0, 0};
    EXPECT_DOUBLE_EQ(coverage_fraction(s, 1.0), 4.0 / 40.0);
}

TEST(Coverage, MatchesBruteForceRaster) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        auto stream = rng_new(Seed{seed});
        HatchConfig cfg;
        cfg.zone_count = 4;
        const auto scene = generate_hatchwork(cfg, stream).scene;
        EXPECT_DOUBLE_EQ(coverage_fraction(scene, 1.0), brute_coverage(scene, 1.0));
    }
    auto stream = rng_new(Seed{4});
    const auto poly = generate_polygon(23, {10, 10, 170, 270}, true, stream);
    EXPECT_DOUBLE_EQ(coverage_fraction(poly, 1.5), brute_coverage(poly, 1.5));
}

TEST(Coverage, BlackeningAcrossSeeds) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const double c1 = coverage_fraction(superposed_runs(seed, 1), 2.0);
        const double c20 = coverage_fraction(superposed_runs(seed, 20), 2.0);
        EXPECT_GT(c20, c1) << "seed " << seed;
    }
}

TEST(Coverage, SuperpositionNeverUncovers) {
    // Coverage of a prefix of runs is a lower bound for the longer superposition.
    auto stream = rng_new(Seed{2});
    const auto cfg = HatchConfig::uniform_recoding();
    std::vector<VectorScene> runs;
    double prev = 0.0;
    for (int k = 1; k <= 6; ++k) {
        runs.push_back(generate_hatchwork(cfg, stream).scene);
        const double c = coverage_fraction(superpose(runs), 2.0);
        EXPECT_GE(c, prev);
        prev = c;
    }
}

TEST(Superpose, RejectsMismatchedCanvas) {
    VectorScene a;
    VectorScene b;
    b.canvas_w = 100;
    std::vector<VectorScene> both{a, b};
    EXPECT_THROW(superpose(both), ConfigError);
}

TEST(Polygon, ClosedVertexCounts) {
    const Rect frame{20, 20, 152, 250};
    for (int n : {8, 23}) {
        auto stream = rng_new(Seed{1});
        const auto scene = generate_polygon(n, frame, true, stream);
        ASSERT_EQ(scene.strokes.size(), 1U);
        const auto& pts = scene.strokes[0].points;
        ASSERT_EQ(pts.size(), static_cast<std::size_t>(n + 1));
        EXPECT_EQ(pts.front(), pts.back());
        for (const auto& p : pts) {
            EXPECT_TRUE(inside(p, frame));
        }
    }
}

TEST(Polygon, OpenAndDegenerate) {
    auto stream = rng_new(Seed{1});
    const auto open = generate_polygon(3, {0, 0, 10, 10}, false, stream);
    EXPECT_EQ(open.strokes[0].points.size(), 3U);

    const auto point = generate_polygon(3, {5, 5, 0, 0}, true, stream);
    ASSERT_EQ(point.strokes.size(), 1U);
    for (const auto& p : point.strokes[0].points) {
        EXPECT_EQ(p, (Point{5, 5}));
    }
    EXPECT_THROW(generate_polygon(2, {0, 0, 10, 10}, true, stream), ConfigError);
}

TEST(DensityGrid, AllMassOnDarkest) {
    const DiscreteDistribution f({0, 0, 0, 0, 1});
    auto stream = rng_new(Seed{0});
    const auto grid = generate_density_grid(3, 4, f, 5.0, stream);
    EXPECT_EQ(grid.scene.strokes.size(), 12U * 4 * 2);
    for (auto level : grid.levels) {
        EXPECT_EQ(level, 4U);
    }
}

TEST(DensityGrid, LevelZeroIsBlank) {
    auto stream = rng_new(Seed{0});
    const auto grid = generate_density_grid(1, 1, DiscreteDistribution({1.0}), 5.0, stream);
    EXPECT_TRUE(grid.scene.strokes.empty());
    EXPECT_THROW(generate_density_grid(0, 3, DiscreteDistribution({1.0}), 5.0, stream), ConfigError);
}

TEST(DensityGrid, LineCountLinearInLevel) {
    const auto f = stochastics::triangular_gray_distribution(5);
    auto stream = rng_new(Seed{8});
    DensityStyle style;
    style.lines_per_level = 3;
    const auto grid = generate_density_grid(10, 10, f, 4.0, stream, style);
    std::vector<std::size_t> strokes_per_cell(100, 0);
    for (const auto& s : grid.scene.strokes) {
        ++strokes_per_cell.at(s.group);
    }
    for (std::size_t i = 0; i < 100; ++i) {
        EXPECT_EQ(strokes_per_cell[i], grid.levels[i] * 3);
    }
}

TEST(DensityGrid, RowZeroAtTop) {
    const DiscreteDistribution f({0, 1});
    auto stream = rng_new(Seed{0});
    const auto grid = generate_density_grid(2, 1, f, 10.0, stream);
    ASSERT_FALSE(grid.scene.strokes.empty());
    EXPECT_GE(grid.scene.strokes.front().points[0].y, 10.0);  // first cell drawn is the upper one
}

TEST(DensityGrid, EmpiricalLawTriangular) {
    const auto f = stochastics::triangular_gray_distribution(5);
    auto stream = rng_new(Seed{0});
    const auto grid = generate_density_grid(50, 50, f, 3.8, stream);
    std::vector<double> freq(5, 0.0);
    for (auto level : grid.levels) {
        freq[level] += 1.0 / 2500.0;
    }
    double l1 = 0.0;
    for (int i = 0; i < 5; ++i) {
        l1 += std::abs(freq[i] - f.weights()[i]);
    }
    EXPECT_LT(l1, 0.05);
    EXPECT_EQ(std::max_element(freq.begin(), freq.end()) - freq.begin(), 2);
}
