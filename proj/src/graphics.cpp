#include "algoart/graphics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "algoart/errors.hpp"

namespace algoart::graphics {

using stochastics::DiscreteDistribution;
using stochastics::RandomStream;
using stochastics::UniformRange;

std::vector<std::string> default_palette() { return {"black", "ochre"}; }

void VectorScene::validate(bool clipping) const {
    if (!(canvas_w > 0.0) || !(canvas_h > 0.0)) {
        throw ConfigError("canvas dimensions must be positive");
    }
    if (palette.empty()) {
        throw ConfigError("scene palette must not be empty");
    }
    for (std::size_t i = 0; i < strokes.size(); ++i) {
        const auto& s = strokes[i];
        const std::string where = "stroke " + std::to_string(i) + ": ";
        if (s.points.size() < 2) {
            throw ConfigError(where + "needs at least 2 points");
        }
        if (!(s.pen_width > 0.0)) {
            throw ConfigError(where + "pen width must be positive");
        }
        if (s.color >= palette.size()) {
            throw ConfigError(where + "color index outside the palette");
        }
        if (clipping) {
            for (const auto& p : s.points) {
                if (p.x < 0.0 || p.x > canvas_w || p.y < 0.0 || p.y > canvas_h) {
                    throw ConfigError(where + "point outside the canvas");
                }
            }
        }
    }
}

HatchDirection classify_direction(double angle_deg) {
    double a = std::fmod(angle_deg, 180.0);
    if (a < 0.0) {
        a += 180.0;
    }
    if (a == 0.0) {
        return HatchDirection::horizontal;
    }
    if (a == 90.0) {
        return HatchDirection::vertical;
    }
    return HatchDirection::oblique;
}

// ---------------------------------------------------------------------------
// ParamSampler

ParamSampler::ParamSampler(std::variant<UniformRange, Levels> source) : source_(std::move(source)) {}

ParamSampler ParamSampler::uniform(double lo, double hi) {
    UniformRange r{lo, hi};
    r.validate();
    return ParamSampler(r);
}

ParamSampler ParamSampler::fixed(double value) {
    return discrete(DiscreteDistribution({1.0}), {value});
}

ParamSampler ParamSampler::discrete(DiscreteDistribution law, std::vector<double> values) {
    if (values.size() != law.size()) {
        throw ConfigError("discrete sampler needs one value per outcome");
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw ConfigError("discrete sampler values must be finite");
        }
    }
    return ParamSampler(Levels{std::move(law), std::move(values)});
}

double ParamSampler::sample(RandomStream& stream) const {
    if (const auto* r = std::get_if<UniformRange>(&source_)) {
        return stochastics::sample_uniform(stream, *r);
    }
    const auto& lv = std::get<Levels>(source_);
    return lv.values[stochastics::sample_discrete(stream, lv.law)];
}

double ParamSampler::min_value() const {
    if (const auto* r = std::get_if<UniformRange>(&source_)) {
        return r->lo;
    }
    const auto& lv = std::get<Levels>(source_);
    double m = INFINITY;
    for (std::size_t i = 0; i < lv.values.size(); ++i) {
        if (lv.law.weights()[i] > 0.0) {
            m = std::min(m, lv.values[i]);
        }
    }
    return m;
}

double ParamSampler::max_value() const {
    if (const auto* r = std::get_if<UniformRange>(&source_)) {
        return r->hi;
    }
    const auto& lv = std::get<Levels>(source_);
    double m = -INFINITY;
    for (std::size_t i = 0; i < lv.values.size(); ++i) {
        if (lv.law.weights()[i] > 0.0) {
            m = std::max(m, lv.values[i]);
        }
    }
    return m;
}

bool ParamSampler::max_inclusive() const {
    if (const auto* r = std::get_if<UniformRange>(&source_)) {
        return r->lo == r->hi;
    }
    return true;
}

// ---------------------------------------------------------------------------
// HatchConfig

HatchConfig HatchConfig::uniform_recoding() { return HatchConfig{}; }

namespace {

// Largest integer a floored draw can produce.
double floored_max(const ParamSampler& s) {
    const double m = s.max_value();
    if (s.max_inclusive()) {
        return std::floor(m);
    }
    return std::ceil(m) - 1.0;
}

void check_origin(const ParamSampler& s, double extent, const char* name) {
    const bool below = s.min_value() < 0.0;
    const bool above = s.max_inclusive() ? s.max_value() >= extent : s.max_value() > extent;
    if (below || above) {
        throw ConfigError(std::string("zone ") + name + " range must lie in [0, canvas)");
    }
}

}  // namespace

void HatchConfig::validate() const {
    if (!(canvas_w > 0.0) || !(canvas_h > 0.0)) {
        throw ConfigError("canvas dimensions must be positive");
    }
    if (palette.empty()) {
        throw ConfigError("palette must not be empty");
    }
    if (!(pen_width > 0.0)) {
        throw ConfigError("pen width must be positive");
    }
    if (zone_count < 1) {
        throw ConfigError("zone count must be at least 1");
    }
    check_origin(x, canvas_w, "x");
    check_origin(y, canvas_h, "y");
    if (!(width.min_value() > 0.0) || !(height.min_value() > 0.0)) {
        throw ConfigError("zone width and height must be strictly positive");
    }
    if (width.max_value() > canvas_w || height.max_value() > canvas_h) {
        throw ConfigError("zone width/height range exceeds the canvas");
    }
    if (std::floor(line_count.min_value()) < 1.0) {
        throw ConfigError("line count range must not go below 1");
    }
    if (color.min_value() < 0.0 || floored_max(color) >= static_cast<double>(palette.size())) {
        throw ConfigError("color range must index the palette");
    }
    if (!std::isfinite(direction.min_value()) || !std::isfinite(direction.max_value())) {
        throw ConfigError("direction range must be finite");
    }
}

// ---------------------------------------------------------------------------
// Hatching geometry

std::optional<std::pair<Point, Point>> clip_line_to_rect(Point origin, Point dir, const Rect& rect) {
    const double x0 = rect.x;
    const double x1 = rect.x + rect.width;
    const double y0 = rect.y;
    const double y1 = rect.y + rect.height;

    if (dir.x == 0.0 && dir.y == 0.0) {
        return std::nullopt;
    }
    // Axis-parallel lines: the left/bottom edge is owned, the right/top edge is not.
    if (dir.x == 0.0) {
        if (origin.x < x0 || origin.x >= x1) {
            return std::nullopt;
        }
        return std::pair{Point{origin.x, dir.y > 0 ? y0 : y1}, Point{origin.x, dir.y > 0 ? y1 : y0}};
    }
    if (dir.y == 0.0) {
        if (origin.y < y0 || origin.y >= y1) {
            return std::nullopt;
        }
        return std::pair{Point{dir.x > 0 ? x0 : x1, origin.y}, Point{dir.x > 0 ? x1 : x0, origin.y}};
    }

    // Liang-Barsky on an unbounded parameter.
    double t_enter = -INFINITY;
    double t_exit = INFINITY;
    const double ps[2] = {dir.x, dir.y};
    const double lo[2] = {x0 - origin.x, y0 - origin.y};
    const double hi[2] = {x1 - origin.x, y1 - origin.y};
    for (int k = 0; k < 2; ++k) {
        double a = lo[k] / ps[k];
        double b = hi[k] / ps[k];
        if (a > b) {
            std::swap(a, b);
        }
        t_enter = std::max(t_enter, a);
        t_exit = std::min(t_exit, b);
    }
    // Touching only at a corner leaves a zero-length chord.
    if (!(t_exit > t_enter)) {
        return std::nullopt;
    }
    auto at = [&](double t) {
        return Point{std::clamp(origin.x + t * dir.x, x0, x1), std::clamp(origin.y + t * dir.y, y0, y1)};
    };
    return std::pair{at(t_enter), at(t_exit)};
}

std::vector<PenStroke> hatch_zone_strokes(const HatchZone& zone, double pen_width, std::size_t group) {
    std::vector<PenStroke> out;
    const int n = zone.line_count;
    if (n < 1) {
        return out;
    }
    out.reserve(static_cast<std::size_t>(n));
    const Rect& r = zone.rect;
    auto emit = [&](Point a, Point b) { out.push_back(PenStroke{{a, b}, pen_width, zone.color, group}); };

    switch (zone.direction()) {
        case HatchDirection::horizontal: {
            const double spacing = r.height / n;
            for (int i = 0; i < n; ++i) {
                const double y = r.y + spacing / 2.0 + i * spacing;
                emit({r.x, y}, {r.x + r.width, y});
            }
            break;
        }
        case HatchDirection::vertical: {
            const double spacing = r.width / n;
            for (int i = 0; i < n; ++i) {
                const double x = r.x + spacing / 2.0 + i * spacing;
                emit({x, r.y}, {x, r.y + r.height});
            }
            break;
        }
        case HatchDirection::oblique: {
            const double a = zone.angle_deg * std::numbers::pi / 180.0;
            const Point dir{std::cos(a), std::sin(a)};
            const Point normal{-dir.y, dir.x};
            const Point corners[4] = {
                {r.x, r.y}, {r.x + r.width, r.y}, {r.x, r.y + r.height}, {r.x + r.width, r.y + r.height}};
            double pmin = INFINITY;
            double pmax = -INFINITY;
            for (const auto& c : corners) {
                const double p = c.x * normal.x + c.y * normal.y;
                pmin = std::min(pmin, p);
                pmax = std::max(pmax, p);
            }
            const double spacing = (pmax - pmin) / n;
            for (int i = 0; i < n; ++i) {
                const double p = pmin + spacing / 2.0 + i * spacing;
                if (auto seg = clip_line_to_rect({p * normal.x, p * normal.y}, dir, r)) {
                    emit(seg->first, seg->second);
                }
            }
            break;
        }
    }
    return out;
}

Hatchwork generate_hatchwork(const HatchConfig& cfg, RandomStream& stream) {
    cfg.validate();
    Hatchwork out;
    out.scene.canvas_w = cfg.canvas_w;
    out.scene.canvas_h = cfg.canvas_h;
    out.scene.palette = cfg.palette;
    out.zones.reserve(static_cast<std::size_t>(cfg.zone_count));

    for (int z = 0; z < cfg.zone_count; ++z) {
        HatchZone zone;
        zone.rect.x = cfg.x.sample(stream);
        zone.rect.y = cfg.y.sample(stream);
        zone.rect.width = std::min(cfg.width.sample(stream), cfg.canvas_w - zone.rect.x);
        zone.rect.height = std::min(cfg.height.sample(stream), cfg.canvas_h - zone.rect.y);
        zone.line_count = static_cast<int>(std::floor(cfg.line_count.sample(stream)));
        zone.angle_deg = cfg.direction.sample(stream);
        zone.color = static_cast<std::size_t>(std::floor(cfg.color.sample(stream)));

        auto strokes = hatch_zone_strokes(zone, cfg.pen_width, static_cast<std::size_t>(z));
        out.scene.strokes.insert(out.scene.strokes.end(), std::make_move_iterator(strokes.begin()),
                                 std::make_move_iterator(strokes.end()));
        out.zones.push_back(zone);
    }
    return out;
}

VectorScene superpose(std::span<const VectorScene> scenes) {
    VectorScene out;
    if (scenes.empty()) {
        return out;
    }
    out.canvas_w = scenes.front().canvas_w;
    out.canvas_h = scenes.front().canvas_h;
    out.palette = scenes.front().palette;
    for (const auto& s : scenes) {
        if (s.canvas_w != out.canvas_w || s.canvas_h != out.canvas_h || s.palette != out.palette) {
            throw ConfigError("superposed scenes must share canvas and palette");
        }
        out.strokes.insert(out.strokes.end(), s.strokes.begin(), s.strokes.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coverage

namespace {

double segment_distance_sq(Point p, Point a, Point b) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len_sq = dx * dx + dy * dy;
    double t = 0.0;
    if (len_sq > 0.0) {
        t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len_sq, 0.0, 1.0);
    }
    const double ex = a.x + t * dx - p.x;
    const double ey = a.y + t * dy - p.y;
    return ex * ex + ey * ey;
}

double box_distance_sq(Point p, const Rect& box) {
    const double dx = std::max({box.x - p.x, 0.0, p.x - (box.x + box.width)});
    const double dy = std::max({box.y - p.y, 0.0, p.y - (box.y + box.height)});
    return dx * dx + dy * dy;
}

bool segment_meets_box(Point a, Point b, const Rect& box) {
    double t0 = 0.0;
    double t1 = 1.0;
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double p[4] = {-dx, dx, -dy, dy};
    const double q[4] = {a.x - box.x, box.x + box.width - a.x, a.y - box.y, box.y + box.height - a.y};
    for (int i = 0; i < 4; ++i) {
        if (p[i] == 0.0) {
            if (q[i] < 0.0) {
                return false;
            }
        } else if (p[i] < 0.0) {
            t0 = std::max(t0, q[i] / p[i]);
        } else {
            t1 = std::min(t1, q[i] / p[i]);
        }
    }
    return t0 <= t1;
}

// Two disjoint convex sets reach their minimum distance at a vertex of one of them.
double segment_box_distance_sq(Point a, Point b, const Rect& box) {
    if (segment_meets_box(a, b, box)) {
        return 0.0;
    }
    double d = std::min(box_distance_sq(a, box), box_distance_sq(b, box));
    const double x1 = box.x + box.width;
    const double y1 = box.y + box.height;
    for (Point c : {Point{box.x, box.y}, Point{x1, box.y}, Point{box.x, y1}, Point{x1, y1}}) {
        d = std::min(d, segment_distance_sq(c, a, b));
    }
    return d;
}

}  // namespace

double coverage_fraction(const VectorScene& scene, double cells_per_mm) {
    if (!(cells_per_mm > 0.0)) {
        throw ConfigError("coverage resolution must be positive");
    }
    const auto nx = static_cast<long>(std::ceil(scene.canvas_w * cells_per_mm));
    const auto ny = static_cast<long>(std::ceil(scene.canvas_h * cells_per_mm));
    if (nx <= 0 || ny <= 0) {
        return 0.0;
    }
    std::vector<unsigned char> hit(static_cast<std::size_t>(nx * ny), 0);
    const double cell = 1.0 / cells_per_mm;

    for (const auto& stroke : scene.strokes) {
        const double r = stroke.pen_width / 2.0;
        const double r_sq = r * r;
        for (std::size_t k = 0; k + 1 < stroke.points.size(); ++k) {
            const Point a = stroke.points[k];
            const Point b = stroke.points[k + 1];
            const long i0 = std::max(0L, static_cast<long>(std::floor((std::min(a.x, b.x) - r) * cells_per_mm)));
            const long i1 = std::min(nx - 1, static_cast<long>(std::floor((std::max(a.x, b.x) + r) * cells_per_mm)));
            const long j0 = std::max(0L, static_cast<long>(std::floor((std::min(a.y, b.y) - r) * cells_per_mm)));
            const long j1 = std::min(ny - 1, static_cast<long>(std::floor((std::max(a.y, b.y) + r) * cells_per_mm)));
            for (long j = j0; j <= j1; ++j) {
                for (long i = i0; i <= i1; ++i) {
                    auto& h = hit[static_cast<std::size_t>(j * nx + i)];
                    if (h) {
                        continue;
                    }
                    const Rect box{static_cast<double>(i) * cell, static_cast<double>(j) * cell, cell, cell};
                    // Strict: a capsule that only grazes a cell edge leaves it untouched.
                    if (segment_box_distance_sq(a, b, box) < r_sq) {
                        h = 1;
                    }
                }
            }
        }
    }
    const auto covered = std::count(hit.begin(), hit.end(), static_cast<unsigned char>(1));
    return static_cast<double>(covered) / static_cast<double>(hit.size());
}

// ---------------------------------------------------------------------------
// Polygons and density grids

VectorScene generate_polygon(int n_vertices, const Rect& frame, bool closed, RandomStream& stream, double canvas_w,
                             double canvas_h) {
    if (n_vertices < 3) {
        throw ConfigError("polygon needs at least 3 vertices");
    }
    if (frame.width < 0.0 || frame.height < 0.0 || frame.x < 0.0 || frame.y < 0.0 ||
        frame.x + frame.width > canvas_w || frame.y + frame.height > canvas_h) {
        throw ConfigError("polygon frame must lie inside the canvas");
    }
    const UniformRange xs{frame.x, frame.x + frame.width};
    const UniformRange ys{frame.y, frame.y + frame.height};

    PenStroke stroke;
    stroke.pen_width = kDefaultPenWidth;
    stroke.points.reserve(static_cast<std::size_t>(n_vertices) + 1);
    for (int i = 0; i < n_vertices; ++i) {
        const double x = stochastics::sample_uniform(stream, xs);
        const double y = stochastics::sample_uniform(stream, ys);
        stroke.points.push_back({x, y});
    }
    if (closed) {
        stroke.points.push_back(stroke.points.front());
    }

    VectorScene scene;
    scene.canvas_w = canvas_w;
    scene.canvas_h = canvas_h;
    scene.palette = {"black"};
    scene.strokes.push_back(std::move(stroke));
    return scene;
}

DensityGrid generate_density_grid(int rows, int cols, const DiscreteDistribution& f, double cell_mm,
                                  RandomStream& stream, const DensityStyle& style) {
    if (rows < 1 || cols < 1) {
        throw ConfigError("density grid needs at least one row and one column");
    }
    if (!(cell_mm > 0.0)) {
        throw ConfigError("density grid cell size must be positive");
    }
    if (style.lines_per_level < 1) {
        throw ConfigError("lines per level must be at least 1");
    }
    if (style.palette.empty() || style.color >= style.palette.size()) {
        throw ConfigError("density grid color must index the palette");
    }

    DensityGrid out;
    out.rows = rows;
    out.cols = cols;
    out.levels.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    out.scene.canvas_w = cols * cell_mm;
    out.scene.canvas_h = rows * cell_mm;
    out.scene.palette = style.palette;

    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const std::size_t level = stochastics::sample_discrete(stream, f);
            out.levels.push_back(level);
            if (level == 0) {
                continue;
            }
            HatchZone zone;
            zone.rect = Rect{c * cell_mm, (rows - 1 - r) * cell_mm, cell_mm, cell_mm};
            zone.line_count = static_cast<int>(level) * style.lines_per_level;
            zone.angle_deg = style.angle_deg;
            zone.color = style.color;
            const auto group = static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c);
            auto strokes = hatch_zone_strokes(zone, style.pen_width, group);
            out.scene.strokes.insert(out.scene.strokes.end(), std::make_move_iterator(strokes.begin()),
                                     std::make_move_iterator(strokes.end()));
        }
    }
    return out;
}

}  // namespace algoart::graphics
