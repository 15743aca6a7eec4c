// algoart: command-line front end for the generators and simulators.
//
// Exit codes: 0 ok, 1 I/O failure, 2 invalid configuration or input,
// 3 numerical failure.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "algoart/errors.hpp"
#include "algoart/run_config.hpp"
#include "algoart/text_format.hpp"
#include "commands.hpp"

using namespace algoart;
using namespace algoart::cli;

namespace {

constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

// Rewrites `--config FILE` into `--key=value` arguments placed before the
// user's own, so command-line flags override file values (last one wins).
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
    if (args.size() < 2) {
        return args;
    }
    std::vector<std::string> rest;
    std::string config_path;
    for (std::size_t i = 2; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            config_path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (config_path.empty()) {
        return args;
    }
    std::vector<std::string> out{args[0], args[1]};
    for (const auto& e : parse_config_text(read_file(config_path))) {
        std::string key = e.key;
        for (char& ch : key) {
            if (ch == '_') {
                ch = '-';
            }
        }
        std::string value = e.value;
        if (key != "weights" && key != "labels" && value.size() >= 2 && value.front() == '[' && value.back() == ']') {
            std::string joined;
            for (const auto& item : parse_list(value)) {
                joined += (joined.empty() ? "" : ",") + item;
            }
            value = joined;
        }
        out.push_back("--" + key + "=" + value);
    }
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

void add_config_option(CLI::App* sub) {
    sub->add_option("--config", "flat `key = value` file; command-line flags override it");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Algorithmic art generators and simulators", "algoart"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    HatchOptions hatch;
    auto* h = app.add_subcommand("hatch", "Stochastic hatchings (uniform zones or density grid) to SVG");
    add_config_option(h);
    h->add_option("--mode", hatch.mode, "uniform or density")->capture_default_str();
    h->add_option("--seed", hatch.seed, "RNG seed")->capture_default_str();
    h->add_option("--zones", hatch.zones, "zones per run (uniform)")->capture_default_str();
    h->add_option("--runs", hatch.runs, "independent runs superposed on one canvas (uniform)")->capture_default_str();
    h->add_option("--canvas-w", hatch.canvas_w, "canvas width, mm")->capture_default_str();
    h->add_option("--canvas-h", hatch.canvas_h, "canvas height, mm")->capture_default_str();
    h->add_option("--width-min", hatch.width_min, "zone width range start, mm")->capture_default_str();
    h->add_option("--width-max", hatch.width_max, "zone width range end, mm")->capture_default_str();
    h->add_option("--height-min", hatch.height_min, "zone height range start, mm")->capture_default_str();
    h->add_option("--height-max", hatch.height_max, "zone height range end, mm")->capture_default_str();
    h->add_option("--lines-min", hatch.lines_min, "fewest lines per zone")->capture_default_str();
    h->add_option("--lines-max", hatch.lines_max, "most lines per zone (inclusive)")->capture_default_str();
    h->add_option("--rows", hatch.rows, "grid rows (density)")->capture_default_str();
    h->add_option("--cols", hatch.cols, "grid columns (density)")->capture_default_str();
    h->add_option("--cell", hatch.cell, "cell size, mm (density)")->capture_default_str();
    h->add_option("--levels", hatch.levels, "gray levels of the default triangular law (density)")
        ->capture_default_str();
    h->add_option("--lines-per-level", hatch.lines_per_level, "hatch lines per gray level (density)")
        ->capture_default_str();
    h->add_option("--weights", hatch.weights, "F weights, e.g. [1,2,3]: gray levels (density) or directions (uniform)");
    h->add_option("--labels", hatch.labels, "labels for the F weights");
    h->add_option("--resolution", hatch.resolution, "coverage raster, cells per mm")->capture_default_str();
    h->add_option("-o,--output", hatch.output, "SVG path (default $ALGOART_OUT_DIR/hatch.svg)");
    h->add_option("--dump", hatch.dump, "stroke dump path (default next to the SVG)");

    PolygonOptions poly;
    auto* p = app.add_subcommand("polygon", "Random polygon through n uniform points to SVG");
    add_config_option(p);
    p->add_option("-n,--vertices", poly.vertices, "vertex count")->capture_default_str();
    p->add_flag("--open", poly.open, "do not close the polyline");
    p->add_option("--seed", poly.seed, "RNG seed")->capture_default_str();
    p->add_option("--margin", poly.margin, "frame inset from the canvas edge, mm")->capture_default_str();
    p->add_option("-o,--output", poly.output, "SVG path (default $ALGOART_OUT_DIR/polygon.svg)");
    p->add_option("--dump", poly.dump, "stroke dump path (default next to the SVG)");

    KdvOptions kdv;
    auto* k = app.add_subcommand("kdv", "Integrate the periodic KdV equation");
    add_config_option(k);
    k->add_option("--profile", kdv.profile, "soliton, zero or file")->capture_default_str();
    k->add_option("--input", kdv.input, "initial profile (one value or `x,u` per line)");
    k->add_option("--n", kdv.n, "grid points")->capture_default_str();
    k->add_option("--length", kdv.length, "domain length")->capture_default_str();
    k->add_option("--speed", kdv.speed, "soliton speed c")->capture_default_str();
    k->add_option("--x0", kdv.x0, "soliton center at t = 0")->capture_default_str();
    k->add_option("--t-end", kdv.t_end, "final time")->capture_default_str();
    k->add_option("--dt", kdv.dt, "time step (0 = automatic)")->capture_default_str();
    k->add_option("--snapshots", kdv.snapshots, "recorded snapshots after t = 0")->capture_default_str();
    k->add_option("-o,--output", kdv.output, "time series CSV (default $ALGOART_OUT_DIR/kdv.csv)");
    k->add_option("--log", kdv.log, "invariant log CSV (default next to the output)");

    WavefieldOptions wf;
    auto* w = app.add_subcommand("wavefield", "Synthesize a sea surface from a directional spectrum");
    add_config_option(w);
    w->add_option("--spectrum", wf.spectrum, "spectrum file (default: bundled synthetic sample)");
    w->add_option("--seed", wf.seed, "RNG seed")->capture_default_str();
    w->add_option("--rows", wf.rows, "field rows")->capture_default_str();
    w->add_option("--cols", wf.cols, "field columns")->capture_default_str();
    w->add_option("--spacing", wf.spacing, "cell spacing, m")->capture_default_str();
    w->add_option("--t-end", wf.t_end, "last frame time, s")->capture_default_str();
    w->add_option("--dt", wf.dt, "frame interval, s")->capture_default_str();
    w->add_option("--h-ref", wf.h_ref, "elevation mapped to full scale, m")->capture_default_str();
    w->add_option("--format", wf.format, "pgm, csv, display or all")->capture_default_str();
    w->add_option("-o,--output", wf.output, "output directory (default $ALGOART_OUT_DIR/wavefield)");

    GridsimOptions gs;
    auto* g = app.add_subcommand("gridsim", "Simulate the thermally drifting compute grid");
    add_config_option(g);
    g->add_option("--spectrum", gs.spectrum, "spectrum file (default: bundled synthetic sample)");
    g->add_option("--seed", gs.seed, "RNG seed")->capture_default_str();
    g->add_option("--units", gs.units, "compute units")->capture_default_str();
    g->add_option("--modules", gs.modules, "modules (units are spread evenly across them)")->capture_default_str();
    g->add_option("--rows", gs.rows, "matrix rows")->capture_default_str();
    g->add_option("--cols", gs.cols, "matrix columns")->capture_default_str();
    g->add_option("--spacing", gs.spacing, "cell spacing, m")->capture_default_str();
    g->add_option("--dt-wave", gs.dt_wave, "wave time per tick, s")->capture_default_str();
    g->add_option("--h-ref", gs.h_ref, "elevation mapped to full scale, m")->capture_default_str();
    g->add_option("--alpha", gs.alpha, "heating per tile row per tick, degC")->capture_default_str();
    g->add_option("--beta", gs.beta, "cooling coefficient per tick")->capture_default_str();
    g->add_option("--gamma", gs.gamma, "slowdown per degC above throttle")->capture_default_str();
    g->add_option("--t-env", gs.t_env, "ambient temperature, degC")->capture_default_str();
    g->add_option("--t-throttle", gs.t_throttle, "throttle threshold, degC")->capture_default_str();
    g->add_option("--p0", gs.p0, "base tick period, s")->capture_default_str();
    g->add_option("--run-iterations", gs.run_iterations, "matrix frames per RUN phase")->capture_default_str();
    g->add_option("--loops", gs.loops, "full phase cycles")->capture_default_str();
    g->add_option("--loop-target", gs.loop_target, "nominal cycle length, s")->capture_default_str();
    g->add_option("--checkpoint", gs.checkpoint, "RUN events between desync measurements")->capture_default_str();
    g->add_option("-o,--output", gs.output, "output directory (default $ALGOART_OUT_DIR/gridsim)");

    CatalogOptions cat;
    auto* c = app.add_subcommand("catalog", "Filter an artwork inventory and emit Markdown");
    add_config_option(c);
    c->add_option("--input", cat.input, "record file (default: bundled sample)");
    c->add_option("--attr", cat.attrs, "required attribute (repeatable or comma separated)")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
        ->delimiter(',');
    c->add_option("--chapter", cat.chapter, "chapter name");
    c->add_option("--year-min", cat.year_min, "earliest year");
    c->add_option("--year-max", cat.year_max, "latest year");
    c->add_option("--title", cat.title, "document title");
    c->add_option("-o,--output", cat.output, "Markdown path (default $ALGOART_OUT_DIR/catalog.md)");
    c->add_option("--records", cat.records, "also write the filtered records here");

    try {
        std::vector<std::string> args(argv, argv + argc);
        args = expand_config(args);
        std::vector<const char*> raw;
        for (const auto& a : args) {
            raw.push_back(a.c_str());
        }
        try {
            app.parse(static_cast<int>(raw.size()), raw.data());
        } catch (const CLI::CallForHelp& e) {
            return app.exit(e);
        } catch (const CLI::CallForAllHelp& e) {
            return app.exit(e);
        } catch (const CLI::ParseError& e) {
            app.exit(e);
            return kExitConfig;
        }

        if (h->parsed()) {
            return cmd_hatch(hatch);
        }
        if (p->parsed()) {
            return cmd_polygon(poly);
        }
        if (k->parsed()) {
            return cmd_kdv(kdv);
        }
        if (w->parsed()) {
            return cmd_wavefield(wf);
        }
        if (g->parsed()) {
            return cmd_gridsim(gs);
        }
        if (c->parsed()) {
            return cmd_catalog(cat);
        }
        return kExitConfig;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << " (last stable t=" << format_fixed(e.last_stable_time(), 6) << ")\n";
        return kExitNumerical;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}
