#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "algoart/catalog.hpp"
#include "algoart/errors.hpp"
#include "algoart/graphics.hpp"
#include "algoart/gridsim.hpp"
#include "algoart/render.hpp"
#include "algoart/run_config.hpp"
#include "algoart/stochastics.hpp"
#include "algoart/text_format.hpp"
#include "algoart/waves.hpp"

#ifndef ALGOART_DATA_DIR
#define ALGOART_DATA_DIR "data"
#endif

namespace fs = std::filesystem;

namespace algoart::cli {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& bytes) {
    std::error_code ec;
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path(), ec);
        if (ec) {
            throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
        }
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

fs::path default_output_dir() {
    if (const char* env = std::getenv("ALGOART_OUT_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return ".";
}

fs::path bundled_data(const std::string& name) {
    return fs::path(ALGOART_DATA_DIR) / name;
}

namespace {

fs::path output_path(const std::string& given, const std::string& fallback) {
    return given.empty() ? default_output_dir() / fallback : fs::path(given);
}

fs::path sibling(const fs::path& p, const std::string& suffix) {
    fs::path out = p;
    out.replace_extension();
    out += suffix;
    return out;
}

waves::DirectionalSpectrum load_spectrum(const std::string& given) {
    const fs::path path = given.empty() ? bundled_data("pierres_noires_2014_02_synthetic.spec") : fs::path(given);
    return waves::parse_spectrum(read_file(path));
}

void write_scene(const graphics::VectorScene& scene, const fs::path& svg, const std::string& dump) {
    write_file(svg, render::scene_to_svg(scene));
    write_file(dump.empty() ? sibling(svg, ".strokes.txt") : fs::path(dump), render::scene_to_stroke_dump(scene));
}

std::string frame_name(std::size_t n, const char* ext) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "frame_%04zu%s", n, ext);
    return buf;
}

}  // namespace

int cmd_hatch(const HatchOptions& opt) {
    auto stream = stochastics::rng_new(stochastics::Seed{opt.seed});
    graphics::VectorScene scene;
    if (opt.mode == "uniform") {
        if (opt.runs < 1) {
            throw ConfigError("runs must be >= 1");
        }
        graphics::HatchConfig cfg;
        cfg.canvas_w = opt.canvas_w;
        cfg.canvas_h = opt.canvas_h;
        cfg.zone_count = opt.zones;
        cfg.x = graphics::ParamSampler::uniform(0.0, opt.canvas_w);
        cfg.y = graphics::ParamSampler::uniform(0.0, opt.canvas_h);
        cfg.width = graphics::ParamSampler::uniform(opt.width_min, opt.width_max);
        cfg.height = graphics::ParamSampler::uniform(opt.height_min, opt.height_max);
        if (opt.lines_max < opt.lines_min) {
            throw ConfigError("lines-max must be >= lines-min");
        }
        cfg.line_count = graphics::ParamSampler::uniform(opt.lines_min, opt.lines_max + 1.0);
        if (!opt.weights.empty()) {
            // F over the four hatch directions.
            auto law = distribution_from_config(opt.weights, opt.labels);
            if (law.size() != 4) {
                throw ConfigError("hatch weights must list 4 values (0, 45, 90, 135 degrees)");
            }
            cfg.direction = graphics::ParamSampler::discrete(std::move(law), {0.0, 45.0, 90.0, 135.0});
        }
        cfg.validate();
        std::vector<graphics::VectorScene> runs;
        for (int k = 0; k < opt.runs; ++k) {
            runs.push_back(graphics::generate_hatchwork(cfg, stream).scene);
        }
        scene = graphics::superpose(runs);
    } else if (opt.mode == "density") {
        auto law = opt.weights.empty() ? stochastics::triangular_gray_distribution(static_cast<std::size_t>(opt.levels))
                                        : distribution_from_config(opt.weights, opt.labels);
        graphics::DensityStyle style;
        style.lines_per_level = opt.lines_per_level;
        scene = graphics::generate_density_grid(opt.rows, opt.cols, law, opt.cell, stream, style).scene;
    } else {
        throw ConfigError("unknown hatch mode '" + opt.mode + "' (uniform or density)");
    }
    const auto svg = output_path(opt.output, "hatch.svg");
    write_scene(scene, svg, opt.dump);
    std::cout << "strokes=" << scene.strokes.size()
              << " coverage=" << format_fixed(graphics::coverage_fraction(scene, opt.resolution), 4) << '\n'
              << "wrote " << svg.string() << '\n';
    return 0;
}

int cmd_polygon(const PolygonOptions& opt) {
    const double m = opt.margin;
    const graphics::Rect frame{m, m, graphics::kDefaultCanvasWidth - 2 * m, graphics::kDefaultCanvasHeight - 2 * m};
    if (frame.width <= 0.0 || frame.height <= 0.0 || m < 0.0) {
        throw ConfigError("margin leaves no drawable frame");
    }
    auto stream = stochastics::rng_new(stochastics::Seed{opt.seed});
    const auto scene = graphics::generate_polygon(opt.vertices, frame, !opt.open, stream);
    const auto svg = output_path(opt.output, "polygon.svg");
    write_scene(scene, svg, opt.dump);
    std::cout << "wrote " << svg.string() << '\n';
    return 0;
}

int cmd_kdv(const KdvOptions& opt) {
    waves::Grid1D grid{opt.n, opt.length / static_cast<double>(opt.n), true};
    grid.validate();
    if (!(opt.t_end > 0.0)) {
        throw ConfigError("t-end must be > 0");
    }
    if (opt.snapshots < 1) {
        throw ConfigError("snapshots must be >= 1");
    }
    std::vector<double> u0;
    if (opt.profile == "soliton") {
        u0 = waves::kdv_soliton_profile(grid, opt.speed, opt.x0);
    } else if (opt.profile == "zero") {
        u0.assign(grid.n, 0.0);
    } else if (opt.profile == "file") {
        if (opt.input.empty()) {
            throw ConfigError("profile 'file' needs --input");
        }
        // One value per line, or `x,u` pairs; `#` comments allowed.
        const auto lines = split_lines(read_file(opt.input));
        for (std::size_t i = 0; i < lines.size(); ++i) {
            auto line = trim(lines[i]);
            if (line.empty() || line.front() == '#') {
                continue;
            }
            if (auto comma = line.rfind(','); comma != std::string_view::npos) {
                line = trim(line.substr(comma + 1));
            }
            double v = 0.0;
            if (!parse_double(line, v) || !std::isfinite(v)) {
                throw ParseError(i + 1, "invalid profile value '" + std::string(line) + "'");
            }
            u0.push_back(v);
        }
        if (u0.size() != grid.n) {
            throw ConfigError("profile has " + std::to_string(u0.size()) + " values, grid has " +
                              std::to_string(grid.n));
        }
    } else {
        throw ConfigError("unknown profile '" + opt.profile + "' (soliton, zero or file)");
    }

    auto state = waves::KdvState::from_profile(grid, std::move(u0));
    double max_u = 0.0;
    for (double v : state.u) {
        max_u = std::max(max_u, std::abs(v));
    }
    double dt = opt.dt;
    if (dt <= 0.0) {
        const double guard = 0.9 * waves::kdv_stable_dt(grid, max_u);
        dt = opt.t_end / std::ceil(opt.t_end / guard);
    }
    const auto steps = static_cast<std::size_t>(std::llround(opt.t_end / dt));
    const std::size_t every = std::max<std::size_t>(1, steps / static_cast<std::size_t>(opt.snapshots));

    std::string series = "t,x,u\n";
    std::string log = "step,t,mass,momentum\n";
    auto record = [&](std::size_t step) {
        for (std::size_t i = 0; i < grid.n; ++i) {
            series += format_fixed(state.t, 6) + ',' + format_fixed(grid.x(i), 6) + ',' + format_fixed(state.u[i], 9) +
                      '\n';
        }
        const auto inv = waves::kdv_invariants(state);
        log += std::to_string(step) + ',' + format_fixed(state.t, 6) + ',' + format_fixed(inv.mass, 12) + ',' +
               format_fixed(inv.momentum, 12) + '\n';
    };
    record(0);
    for (std::size_t s = 1; s <= steps; ++s) {
        state = waves::kdv_step(state, dt);
        if (s % every == 0 || s == steps) {
            record(s);
        }
    }
    const auto out = output_path(opt.output, "kdv.csv");
    write_file(out, series);
    write_file(opt.log.empty() ? sibling(out, ".invariants.csv") : fs::path(opt.log), log);
    std::cout << "steps=" << steps << " dt=" << format_fixed(dt, 9) << '\n' << "wrote " << out.string() << '\n';
    return 0;
}

int cmd_wavefield(const WavefieldOptions& opt) {
    const bool pgm = opt.format == "pgm" || opt.format == "all";
    const bool csv = opt.format == "csv" || opt.format == "all";
    const bool display = opt.format == "display" || opt.format == "all";
    if (!pgm && !csv && !display) {
        throw ConfigError("unknown format '" + opt.format + "' (pgm, csv, display or all)");
    }
    if (!(opt.dt > 0.0) || opt.t_end < 0.0) {
        throw ConfigError("dt must be > 0 and t-end >= 0");
    }
    const auto sp = load_spectrum(opt.spectrum);
    auto stream = stochastics::rng_new(stochastics::Seed{opt.seed});
    const auto cs = waves::synthesize_components(sp, stream);
    const double m0 = waves::spectral_moment_m0(sp);

    const fs::path dir = opt.output.empty() ? default_output_dir() / "wavefield" : fs::path(opt.output);
    const auto n_frames = static_cast<std::size_t>(std::floor(opt.t_end / opt.dt + 1e-9)) + 1;
    std::vector<gridsim::Frame> frames;
    for (std::size_t k = 0; k < n_frames; ++k) {
        const double t = static_cast<double>(k) * opt.dt;
        const auto hf = waves::evaluate_field(cs, opt.rows, opt.cols, opt.spacing, t);
        if (pgm) {
            write_file(dir / frame_name(k, ".pgm"), render::field_to_pgm(hf, opt.h_ref));
        }
        if (csv) {
            write_file(dir / frame_name(k, ".csv"), render::field_to_csv(hf));
        }
        if (display) {
            gridsim::Frame f;
            f.index = k + 1;
            f.t = t;
            f.matrix = waves::normalize_display(hf, opt.h_ref);
            frames.push_back(std::move(f));
        }
    }
    if (display) {
        write_file(dir / "frames.txt", gridsim::frames_to_text(frames));
    }

    std::string summary = "station: " + sp.station + "\nmonth: " + sp.month + "\ncomponents: " +
                          std::to_string(cs.components.size()) + "\nm0_m2: " + format_fixed(m0, 6) +
                          "\nhs_m: " + format_fixed(waves::significant_height(m0), 3) + '\n';
    if (sp.hs_reported) {
        summary += "hs_reported_m: " + format_fixed(*sp.hs_reported, 3) + '\n';
    }
    write_file(dir / "summary.txt", summary);
    std::cout << summary << "wrote " << n_frames << " frame(s) to " << dir.string() << '\n';
    return 0;
}

int cmd_gridsim(const GridsimOptions& opt) {
    if (opt.loops < 1) {
        throw ConfigError("loops must be >= 1");
    }
    gridsim::GridConfig cfg;
    cfg.units = opt.units;
    cfg.modules = opt.modules;
    cfg.rows = opt.rows;
    cfg.cols = opt.cols;
    cfg.spacing = opt.spacing;
    cfg.dt_wave = opt.dt_wave;
    cfg.h_ref = opt.h_ref;
    cfg.seed = opt.seed;
    cfg.thermal.alpha = opt.alpha;
    cfg.thermal.beta = opt.beta;
    cfg.thermal.gamma = opt.gamma;
    cfg.thermal.t_env = opt.t_env;
    cfg.thermal.t_throttle = opt.t_throttle;
    cfg.thermal.p0 = opt.p0;
    cfg.run_iterations = opt.run_iterations;
    cfg.validate();

    const auto sp = load_spectrum(opt.spectrum);
    auto stream = stochastics::RandomStream::for_lane(stochastics::Seed{opt.seed}, 1);
    auto state = gridsim::grid_new(cfg, waves::synthesize_components(sp, stream));

    std::vector<gridsim::Frame> frames;
    std::vector<gridsim::PhaseLogEntry> log;
    std::string desync = "loop,events,sim_time_s,spread_s,entropy_nats\n";
    std::string durations;
    for (int loop = 0; loop < opt.loops; ++loop) {
        auto result = gridsim::run_phase_cycle(state, cfg.run_iterations, opt.loop_target, opt.checkpoint);
        for (const auto& c : result.checkpoints) {
            desync += std::to_string(loop) + ',' + std::to_string(c.events) + ',' + format_fixed(c.t, 3) + ',' +
                      format_fixed(c.metrics.spread, 3) + ',' + format_fixed(c.metrics.entropy, 6) + '\n';
        }
        frames.insert(frames.end(), result.frames.begin(), result.frames.end());
        // The closing SYNC of one loop is the opening SYNC of the next.
        if (!log.empty()) {
            log.pop_back();
        }
        log.insert(log.end(), result.log.begin(), result.log.end());
        durations += "loop " + std::to_string(loop) + " duration_s=" + format_fixed(result.duration, 3) +
                     " target_s=" + format_fixed(result.target, 3) + '\n';
    }
    const fs::path dir = opt.output.empty() ? default_output_dir() / "gridsim" : fs::path(opt.output);
    write_file(dir / "frames.txt", gridsim::frames_to_text(frames));
    write_file(dir / "phase_log.csv", gridsim::phase_log_to_csv(log));
    write_file(dir / "desync.csv", desync);
    std::cout << durations << "wrote " << frames.size() << " frame(s) to " << dir.string() << '\n';
    return 0;
}

int cmd_catalog(const CatalogOptions& opt) {
    const fs::path in = opt.input.empty() ? bundled_data("catalog_sample.txt") : fs::path(opt.input);
    const auto cat = catalog::parse_catalog(read_file(in));

    catalog::CatalogFilter filter;
    for (const auto& name : opt.attrs) {
        const auto a = catalog::parse_attribute(trim(name));
        if (!a) {
            throw ConfigError("unknown attribute '" + name + "'");
        }
        filter.attributes.insert(*a);
    }
    if (!opt.chapter.empty()) {
        const auto c = catalog::parse_chapter(opt.chapter);
        if (!c) {
            throw ConfigError("unknown chapter '" + opt.chapter + "'");
        }
        filter.chapter = *c;
    }
    if (opt.year_min != 0) {
        filter.year_min = opt.year_min;
    }
    if (opt.year_max != 0) {
        filter.year_max = opt.year_max;
    }
    const auto selected = catalog::filter_catalog(cat, filter);
    const auto title = opt.title.empty() ? std::string(catalog::kDefaultTitle) : opt.title;
    const auto out = output_path(opt.output, "catalog.md");
    write_file(out, catalog::emit_markdown(selected, title));
    if (!opt.records.empty()) {
        write_file(opt.records, catalog::emit_records(selected));
    }
    std::cout << "entries=" << selected.entries.size() << " of " << cat.entries.size() << '\n'
              << "wrote " << out.string() << '\n';
    return 0;
}

}  // namespace algoart::cli
