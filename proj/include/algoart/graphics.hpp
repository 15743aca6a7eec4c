#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "algoart/stochastics.hpp"

/// Plotter-style vector graphics: stochastic rectangular hatchings, density
/// grids and random polygons. Coordinates are millimeters with the origin at
/// the lower-left corner of the canvas (y grows upward, as on a pen plotter).
namespace algoart::graphics {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

struct Rect {
    double x = 0.0;
    double y = 0.0;
    double width = 0.0;
    double height = 0.0;

    friend bool operator==(const Rect&, const Rect&) = default;
};

struct PenStroke {
    std::vector<Point> points;
    double pen_width = 0.5;
    std::size_t color = 0;  ///< palette index
    std::size_t group = 0;  ///< zone / cell the stroke belongs to

    friend bool operator==(const PenStroke&, const PenStroke&) = default;
};

inline constexpr double kDefaultCanvasWidth = 192.0;
inline constexpr double kDefaultCanvasHeight = 290.0;
inline constexpr double kDefaultPenWidth = 0.5;

std::vector<std::string> default_palette();

/// Strokes in plotting order: later strokes overprint earlier ones.
struct VectorScene {
    double canvas_w = kDefaultCanvasWidth;
    double canvas_h = kDefaultCanvasHeight;
    std::vector<PenStroke> strokes;
    std::vector<std::string> palette = default_palette();

    /// Checks stroke and palette invariants; points must lie inside the canvas
    /// unless `clipping` is false. Throws ConfigError.
    void validate(bool clipping = true) const;

    friend bool operator==(const VectorScene&, const VectorScene&) = default;
};

enum class HatchDirection { horizontal, vertical, oblique };

/// Classifies an angle in degrees; angles are taken modulo 180.
HatchDirection classify_direction(double angle_deg);

struct HatchZone {
    Rect rect;
    int line_count = 1;
    double angle_deg = 0.0;  ///< 0 = horizontal lines, 90 = vertical lines
    std::size_t color = 0;

    HatchDirection direction() const { return classify_direction(angle_deg); }
};

/// Draws one visual parameter either from a uniform range or from a discrete
/// law F over explicit numeric levels.
class ParamSampler {
public:
    struct Levels {
        stochastics::DiscreteDistribution law;
        std::vector<double> values;
    };

    static ParamSampler uniform(double lo, double hi);
    static ParamSampler fixed(double value);
    static ParamSampler discrete(stochastics::DiscreteDistribution law, std::vector<double> values);

    /// Every sampler consumes exactly one stream draw.
    double sample(stochastics::RandomStream& stream) const;

    /// Smallest value that can be drawn.
    double min_value() const;
    /// Largest value that can be drawn (uniform ranges are half-open, so this
    /// is a supremum there).
    double max_value() const;
    /// True when max_value() itself can be drawn.
    bool max_inclusive() const;

private:
    explicit ParamSampler(std::variant<stochastics::UniformRange, Levels> source);

    std::variant<stochastics::UniformRange, Levels> source_;
};

struct HatchConfig {
    double canvas_w = kDefaultCanvasWidth;
    double canvas_h = kDefaultCanvasHeight;
    std::vector<std::string> palette = default_palette();
    double pen_width = kDefaultPenWidth;
    int zone_count = 20;

    ParamSampler x = ParamSampler::uniform(0.0, kDefaultCanvasWidth);
    ParamSampler y = ParamSampler::uniform(0.0, kDefaultCanvasHeight);
    ParamSampler width = ParamSampler::uniform(10.0, 100.0);
    ParamSampler height = ParamSampler::uniform(10.0, 150.0);
    ParamSampler line_count = ParamSampler::uniform(2.0, 41.0);  ///< floored
    ParamSampler direction = ParamSampler::discrete(stochastics::DiscreteDistribution::uniform(4), {0.0, 45.0, 90.0, 135.0});
    ParamSampler color = ParamSampler::discrete(stochastics::DiscreteDistribution::uniform(2), {0.0, 1.0});

    /// The equiprobable recoding on the 192 x 290 mm canvas, black and ochre.
    static HatchConfig uniform_recoding();

    /// Throws ConfigError when some sampled zone could leave the canvas, have
    /// no hatch line, or reference a color outside the palette.
    void validate() const;
};

struct Hatchwork {
    std::vector<HatchZone> zones;
    VectorScene scene;
};

/// Parallel hatch lines for one zone: `line_count` strokes along the zone
/// direction, evenly spaced across the perpendicular extent (spacing
/// extent / n, first line at spacing / 2), clipped to the zone rectangle.
std::vector<PenStroke> hatch_zone_strokes(const HatchZone& zone, double pen_width, std::size_t group);

/// Clips the infinite line through `origin` along `dir` to `rect` with
/// half-open edge ownership: a line meeting the rectangle only on its right or
/// top edge, or only at a corner, yields nothing.
std::optional<std::pair<Point, Point>> clip_line_to_rect(Point origin, Point dir, const Rect& rect);

/// Samples zones in the fixed order x, y, width, height, line_count,
/// direction, color (one draw each). Width and height are clamped so the zone
/// stays inside the canvas.
Hatchwork generate_hatchwork(const HatchConfig& cfg, stochastics::RandomStream& stream);

/// Concatenates scenes in order; all must share canvas and palette.
VectorScene superpose(std::span<const VectorScene> scenes);

/// Fraction of raster cells (resolution cells per mm) touched by some
/// stroke: the square cell comes closer than half a pen width to one of the
/// stroke's segments.
double coverage_fraction(const VectorScene& scene, double cells_per_mm);

/// One polyline through `n_vertices` points drawn uniformly in `frame`
/// (x then y per vertex). A closed polygon repeats the first point.
VectorScene generate_polygon(int n_vertices, const Rect& frame, bool closed, stochastics::RandomStream& stream,
                             double canvas_w = kDefaultCanvasWidth, double canvas_h = kDefaultCanvasHeight);

struct DensityStyle {
    int lines_per_level = 2;
    double pen_width = kDefaultPenWidth;
    double angle_deg = 0.0;
    std::size_t color = 0;
    std::vector<std::string> palette = default_palette();
};

struct DensityGrid {
    int rows = 0;
    int cols = 0;
    std::vector<std::size_t> levels;  ///< row-major sampled gray levels
    VectorScene scene;
};

/// rows x cols square cells of `cell_mm`, row 0 at the top of the canvas.
/// Each cell draws a gray level g from `f` (row-major) and is hatched with
/// g * lines_per_level lines; level 0 leaves the cell blank.
DensityGrid generate_density_grid(int rows, int cols, const stochastics::DiscreteDistribution& f, double cell_mm,
                                  stochastics::RandomStream& stream, const DensityStyle& style = {});

}  // namespace algoart::graphics
