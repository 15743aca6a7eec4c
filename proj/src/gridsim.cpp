#include "algoart/gridsim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "algoart/errors.hpp"
#include "algoart/render.hpp"
#include "algoart/text_format.hpp"

namespace algoart::gridsim {

void GridConfig::validate() const {
    if (units < 1 || modules < 1) {
        throw ConfigError("grid needs at least one unit and one module");
    }
    if (units % modules != 0) {
        throw ConfigError("unit count " + std::to_string(units) + " is not divisible by module count " +
                          std::to_string(modules));
    }
    if (rows < static_cast<std::size_t>(units)) {
        throw ConfigError("matrix needs at least one row per unit");
    }
    if (cols < 1) {
        throw ConfigError("matrix needs at least one column");
    }
    if (!(spacing > 0.0) || !(dt_wave > 0.0) || !(h_ref > 0.0)) {
        throw ConfigError("spacing, dt_wave and h_ref must be positive");
    }
    const auto& th = thermal;
    if (!(th.beta > 0.0 && th.beta < 1.0)) {
        throw ConfigError("beta must lie in (0, 1)");
    }
    if (!(th.p0 > 0.0)) {
        throw ConfigError("base tick period p0 must be positive");
    }
    if (!(th.gamma >= 0.0) || !(th.alpha >= 0.0)) {
        throw ConfigError("alpha and gamma must be non-negative");
    }
    if (!(th.epsilon_lo > 0.0) || th.epsilon_lo > th.epsilon_hi) {
        throw ConfigError("epsilon range must be positive with lo <= hi");
    }
    if (!std::isfinite(th.t_env) || !std::isfinite(th.t_throttle)) {
        throw ConfigError("temperatures must be finite");
    }
    if (!(temp_display_s >= 0.0) || !(cooldown_margin > 0.0)) {
        throw ConfigError("temp_display_s must be >= 0 and cooldown_margin > 0");
    }
    if (entropy_bins < 1) {
        throw ConfigError("entropy needs at least one bin");
    }
}

std::string_view phase_name(Phase phase) {
    switch (phase) {
        case Phase::sync: return "SYNC";
        case Phase::run: return "RUN";
        case Phase::halt: return "HALT";
        case Phase::temp_display: return "TEMP_DISPLAY";
        case Phase::cooldown: return "COOLDOWN";
    }
    return "UNKNOWN";
}

double tick_period(const ThermalParams& th, double temp) {
    return th.p0 * (1.0 + th.gamma * std::max(0.0, temp - th.t_throttle));
}

double heat(const ThermalParams& th, double temp, double epsilon, std::size_t work) {
    return temp + th.alpha * epsilon * static_cast<double>(work) - th.beta * (temp - th.t_env);
}

double cool(const ThermalParams& th, double temp) { return temp - th.beta * (temp - th.t_env); }

GridSimState grid_new(const GridConfig& config, waves::WaveComponentSet waves) {
    config.validate();
    GridSimState state;
    state.config = config;
    state.waves = std::move(waves);

    auto stream = stochastics::rng_new(stochastics::Seed{config.seed});
    const stochastics::UniformRange eps{config.thermal.epsilon_lo, config.thermal.epsilon_hi};
    const auto units = static_cast<std::size_t>(config.units);
    const int per_module = config.units / config.modules;
    for (std::size_t u = 0; u < units; ++u) {
        UnitSpec spec;
        spec.id = static_cast<int>(u);
        spec.module_id = spec.id / per_module;
        spec.row_begin = u * config.rows / units;
        spec.row_end = (u + 1) * config.rows / units;
        spec.epsilon = stochastics::sample_uniform(stream, eps);
        state.specs.push_back(spec);

        UnitState us;
        us.temp = config.thermal.t_env;
        state.units.push_back(std::move(us));
    }
    state.phase = Phase::sync;
    return state;
}

void begin_run(GridSimState& state) {
    if (state.phase != Phase::sync) {
        throw ConfigError("begin_run requires phase SYNC");
    }
    std::uint64_t aligned = 0;
    for (const auto& u : state.units) {
        aligned = std::max(aligned, u.steps);
    }
    for (auto& u : state.units) {
        u.steps = aligned;
        u.local_time = static_cast<double>(aligned) * state.config.dt_wave;
        u.next_fire = state.wall_clock + tick_period(state.config.thermal, u.temp);
    }
    state.run_base_steps = aligned;
    state.run_frames = 0;
    state.phase = Phase::run;
}

namespace {

double next_fire_time(const GridSimState& state) {
    double t = std::numeric_limits<double>::infinity();
    for (const auto& u : state.units) {
        t = std::min(t, u.next_fire);
    }
    return t;
}

Frame assemble_frame(GridSimState& state) {
    const auto& cfg = state.config;
    waves::HeightField hf;
    hf.rows = cfg.rows;
    hf.cols = cfg.cols;
    hf.spacing = cfg.spacing;
    hf.t = state.wall_clock;
    hf.h.resize(cfg.rows * cfg.cols, 0.0);
    for (std::size_t u = 0; u < state.units.size(); ++u) {
        const auto& spec = state.specs[u];
        const auto& tile = state.units[u].tile;
        std::copy(tile.begin(), tile.end(), hf.h.begin() + static_cast<std::ptrdiff_t>(spec.row_begin * cfg.cols));
    }
    Frame f;
    f.index = ++state.frame_counter;
    f.t = state.wall_clock;
    f.phase = Phase::run;
    f.matrix = waves::normalize_display(hf, cfg.h_ref);
    return f;
}

std::uint64_t min_steps(const GridSimState& state) {
    std::uint64_t m = std::numeric_limits<std::uint64_t>::max();
    for (const auto& u : state.units) {
        m = std::min(m, u.steps);
    }
    return m;
}

}  // namespace

std::vector<Frame> grid_tick(GridSimState& state, std::size_t event_budget, std::optional<std::uint64_t> frame_limit) {
    if (state.phase != Phase::run) {
        throw ConfigError("grid_tick requires phase RUN");
    }
    const auto& cfg = state.config;
    std::vector<Frame> frames;
    for (std::size_t e = 0; e < event_budget; ++e) {
        if (frame_limit && state.run_frames >= *frame_limit) {
            break;
        }
        // Earliest next_fire, ties to the lowest unit id.
        std::size_t next = 0;
        for (std::size_t u = 1; u < state.units.size(); ++u) {
            if (state.units[u].next_fire < state.units[next].next_fire) {
                next = u;
            }
        }
        auto& unit = state.units[next];
        const auto& spec = state.specs[next];
        state.wall_clock = std::max(state.wall_clock, unit.next_fire);

        unit.tile = waves::evaluate_rows(state.waves, spec.row_begin, spec.row_end, cfg.cols, cfg.spacing,
                                         unit.local_time);
        unit.tile_written = true;
        ++unit.steps;
        unit.local_time = static_cast<double>(unit.steps) * cfg.dt_wave;
        unit.temp = heat(cfg.thermal, unit.temp, spec.epsilon, spec.work());
        unit.next_fire = state.wall_clock + tick_period(cfg.thermal, unit.temp);
        ++state.events;

        const std::uint64_t completed = min_steps(state) - state.run_base_steps;
        while (state.run_frames < completed && (!frame_limit || state.run_frames < *frame_limit)) {
            ++state.run_frames;
            frames.push_back(assemble_frame(state));
        }
    }
    return frames;
}

std::vector<Frame> finish_instant(GridSimState& state, std::optional<std::uint64_t> frame_limit) {
    std::vector<Frame> out;
    while (next_fire_time(state) <= state.wall_clock && (!frame_limit || state.run_frames < *frame_limit)) {
        auto more = grid_tick(state, 1, frame_limit);
        out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    }
    return out;
}

DesyncMetrics measure_desync(const GridSimState& state, std::size_t bins) {
    DesyncMetrics m;
    if (state.units.empty() || bins == 0) {
        return m;
    }
    double lo = state.units.front().local_time;
    double hi = lo;
    for (const auto& u : state.units) {
        lo = std::min(lo, u.local_time);
        hi = std::max(hi, u.local_time);
    }
    m.spread = hi - lo;
    if (m.spread == 0.0) {
        return m;
    }
    std::vector<std::size_t> counts(bins, 0);
    for (const auto& u : state.units) {
        const double scaled = (u.local_time - lo) / m.spread * static_cast<double>(bins);
        const auto b = std::min(bins - 1, static_cast<std::size_t>(scaled));
        ++counts[b];
    }
    const double n = static_cast<double>(state.units.size());
    for (std::size_t c : counts) {
        if (c > 0) {
            const double p = static_cast<double>(c) / n;
            m.entropy -= p * std::log(p);
        }
    }
    return m;
}

CycleResult run_phase_cycle(GridSimState& state, std::size_t run_iterations, double loop_target_s,
                            std::size_t checkpoint_every) {
    if (state.phase != Phase::sync) {
        throw ConfigError("run_phase_cycle requires phase SYNC");
    }
    const auto& cfg = state.config;
    CycleResult result;
    result.target = loop_target_s;
    const double start = state.wall_clock;
    auto log = [&](Phase p) {
        state.phase = p;
        result.log.push_back({state.loop_index, p, state.wall_clock});
    };

    log(Phase::sync);
    begin_run(state);
    log(Phase::run);
    const std::uint64_t run_start = state.events;
    while (state.run_frames < run_iterations) {
        std::size_t budget = state.units.size();
        if (checkpoint_every > 0) {
            budget = std::min<std::size_t>(budget, checkpoint_every - (state.events - run_start) % checkpoint_every);
        }
        auto frames = grid_tick(state, budget, run_iterations);
        const std::uint64_t done = state.events - run_start;
        if (checkpoint_every > 0 && done > 0 && done % checkpoint_every == 0) {
            auto more = finish_instant(state, run_iterations);
            frames.insert(frames.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
            result.checkpoints.push_back({state.events - run_start, state.wall_clock, measure_desync(state, cfg.entropy_bins)});
        }
        result.frames.insert(result.frames.end(), std::make_move_iterator(frames.begin()),
                             std::make_move_iterator(frames.end()));
    }
    log(Phase::halt);

    log(Phase::temp_display);
    for (std::size_t u = 0; u < state.units.size(); ++u) {
        Frame f;
        f.index = ++state.frame_counter;
        f.t = state.wall_clock;
        f.phase = Phase::temp_display;
        f.reading = TempReading{state.specs[u].id, state.units[u].temp};
        result.frames.push_back(std::move(f));
        state.wall_clock += cfg.temp_display_s;
    }

    log(Phase::cooldown);
    auto hottest = [&] {
        double m = -std::numeric_limits<double>::infinity();
        for (const auto& u : state.units) {
            m = std::max(m, u.temp);
        }
        return m;
    };
    auto snapshot = [&] {
        std::vector<double> temps;
        temps.reserve(state.units.size());
        for (const auto& u : state.units) {
            temps.push_back(u.temp);
        }
        return temps;
    };
    result.cooldown_trace.push_back(snapshot());
    while (hottest() - cfg.thermal.t_env >= cfg.cooldown_margin) {
        for (auto& u : state.units) {
            u.temp = cool(cfg.thermal, u.temp);
        }
        state.wall_clock += cfg.thermal.p0;
        ++result.cooldown_ticks;
        result.cooldown_trace.push_back(snapshot());
    }

    ++state.loop_index;
    log(Phase::sync);
    result.duration = state.wall_clock - start;
    return result;
}

std::string frame_to_text(const Frame& frame) {
    std::string out = "frame " + std::to_string(frame.index) + " t=" + format_fixed(frame.t, 3) +
                      " phase=" + std::string(phase_name(frame.phase)) + '\n';
    if (frame.reading) {
        out += "unit " + std::to_string(frame.reading->unit) + " temp=" + format_fixed(frame.reading->temp, 1) + " C\n";
    } else {
        out += render::display_to_text(frame.matrix);
    }
    return out;
}

std::string frames_to_text(const std::vector<Frame>& frames) {
    std::string out;
    for (std::size_t i = 0; i < frames.size(); ++i) {
        if (i > 0) {
            out += "---\n";
        }
        out += frame_to_text(frames[i]);
    }
    return out;
}

std::string phase_log_to_csv(const std::vector<PhaseLogEntry>& log) {
    std::string out = "loop,phase,sim_time_s\n";
    for (const auto& e : log) {
        out += std::to_string(e.loop) + ',' + std::string(phase_name(e.phase)) + ',' + format_fixed(e.t, 3) + '\n';
    }
    return out;
}

}  // namespace algoart::gridsim
