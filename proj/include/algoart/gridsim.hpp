#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algoart/stochastics.hpp"
#include "algoart/waves.hpp"

/// Discrete-event simulation of a grid of compute units that share a height
/// matrix, heat up while computing, throttle, drift apart in wave time, stop,
/// show their temperatures one after the other, cool down and start again.
///
/// All times are simulated seconds. The default thermal constants are
/// fictional; they are chosen so that a default cycle lasts about 20 minutes.
namespace algoart::gridsim {

struct ThermalParams {
    double alpha = 1.0;        ///< degC per op-block (one tile row) per tick
    double beta = 0.03;        ///< Newtonian cooling coefficient per tick, in (0, 1)
    double t_env = 25.0;       ///< ambient degC
    double t_throttle = 60.0;  ///< degC above which the tick period stretches
    double gamma = 0.3;        ///< relative slowdown per degC above t_throttle
    double p0 = 2.0;           ///< base tick period, s
    double epsilon_lo = 0.95;  ///< per-unit heating heterogeneity range [lo, hi)
    double epsilon_hi = 1.05;
};

struct GridConfig {
    int units = 32;
    int modules = 8;
    std::size_t rows = 64;
    std::size_t cols = 8;
    double spacing = 8.0;         ///< m per matrix cell
    double dt_wave = 1.0;         ///< wave time advanced by one unit tick, s
    double h_ref = 10.0;          ///< m mapped to the display maximum
    ThermalParams thermal;
    std::uint64_t seed = 0;
    double temp_display_s = 3.0;  ///< time each unit shows its temperature
    double cooldown_margin = 0.5; ///< degC above t_env that ends COOLDOWN
    std::size_t entropy_bins = 16;
    std::size_t run_iterations = 80;

    /// Throws ConfigError for an invalid partition or thermal constants.
    void validate() const;
};

enum class Phase { sync, run, halt, temp_display, cooldown };

std::string_view phase_name(Phase phase);

struct UnitSpec {
    int id = 0;
    int module_id = 0;
    std::size_t row_begin = 0;  ///< tile rows [row_begin, row_end)
    std::size_t row_end = 0;
    double epsilon = 1.0;

    std::size_t work() const { return row_end - row_begin; }
};

struct UnitState {
    std::uint64_t steps = 0;
    double local_time = 0.0;  ///< steps * dt_wave
    double temp = 25.0;
    double next_fire = 0.0;
    std::vector<double> tile;  ///< freshest computed tile, row-major
    bool tile_written = false;
};

struct GridSimState {
    GridConfig config;
    waves::WaveComponentSet waves;
    std::vector<UnitSpec> specs;
    std::vector<UnitState> units;
    Phase phase = Phase::sync;
    double wall_clock = 0.0;
    std::uint64_t loop_index = 0;
    std::uint64_t events = 0;         ///< events processed since construction
    std::uint64_t frame_counter = 0;  ///< frames emitted since construction
    std::uint64_t run_base_steps = 0; ///< aligned step count at the last SYNC
    std::uint64_t run_frames = 0;     ///< matrix frames emitted in the current RUN
};

struct TempReading {
    int unit = 0;
    double temp = 0.0;
};

/// A RUN frame carries the assembled display matrix; a TEMP_DISPLAY frame
/// carries one unit's temperature.
struct Frame {
    std::uint64_t index = 0;
    double t = 0.0;
    Phase phase = Phase::run;
    waves::DisplayMatrix matrix;
    std::optional<TempReading> reading;
};

struct DesyncMetrics {
    double spread = 0.0;   ///< s
    double entropy = 0.0;  ///< nats
};

struct PhaseLogEntry {
    std::uint64_t loop = 0;
    Phase phase = Phase::sync;
    double t = 0.0;
};

/// Partitions the rows into balanced contiguous tiles, draws each unit's
/// epsilon from the seeded stream in id order, sets every temperature to
/// t_env and starts in SYNC.
GridSimState grid_new(const GridConfig& config, waves::WaveComponentSet waves);

/// Aligns every unit to the most advanced wave time and schedules the first
/// ticks. Moves SYNC to RUN.
void begin_run(GridSimState& state);

/// Processes up to `event_budget` unit ticks in (next_fire, unit id) order.
/// Each tick computes the unit's tile at its local time, advances the local
/// time by dt_wave, updates the temperature and schedules the next tick.
/// A matrix frame is emitted each time every unit has completed one more
/// step, assembled from the freshest tile of each unit. Stops early once
/// `frame_limit` RUN frames have been emitted. Requires phase RUN.
std::vector<Frame> grid_tick(GridSimState& state, std::size_t event_budget,
                             std::optional<std::uint64_t> frame_limit = std::nullopt);

/// Processes the remaining ticks scheduled at the current wall-clock time so
/// that no unit lags behind others that fired at the same instant. Measure
/// desync after this. Honors the same frame limit as grid_tick.
std::vector<Frame> finish_instant(GridSimState& state, std::optional<std::uint64_t> frame_limit = std::nullopt);

/// Spread of local times and the Shannon entropy of their offsets binned
/// into `bins` equal bins spanning the spread (0 when the spread is 0).
DesyncMetrics measure_desync(const GridSimState& state, std::size_t bins = 16);

/// Tick period for a unit at `temp`: p0 (1 + gamma max(0, temp - t_throttle)).
double tick_period(const ThermalParams& thermal, double temp);

/// One heating update: temp + alpha eps work - beta (temp - t_env).
double heat(const ThermalParams& thermal, double temp, double epsilon, std::size_t work);

/// One cooling tick: temp - beta (temp - t_env).
double cool(const ThermalParams& thermal, double temp);

struct Checkpoint {
    std::uint64_t events = 0;  ///< RUN events processed so far in this cycle
    double t = 0.0;
    DesyncMetrics metrics;
};

struct CycleResult {
    std::vector<PhaseLogEntry> log;
    std::vector<Checkpoint> checkpoints;
    std::vector<Frame> frames;
    std::uint64_t cooldown_ticks = 0;
    double duration = 0.0;  ///< simulated seconds from SYNC to the next SYNC
    double target = 0.0;
    /// Temperatures at the start of COOLDOWN and after every cooling tick.
    std::vector<std::vector<double>> cooldown_trace;
};

/// SYNC -> RUN (run_iterations frames) -> HALT -> TEMP_DISPLAY -> COOLDOWN ->
/// SYNC. Cooling ticks last p0 each and continue until the hottest unit is
/// within cooldown_margin of t_env. With `checkpoint_every` > 0 the desync
/// metrics are recorded after every that many RUN events. Requires phase SYNC.
CycleResult run_phase_cycle(GridSimState& state, std::size_t run_iterations, double loop_target_s,
                            std::size_t checkpoint_every = 0);

// Wire formats

/// `frame <n> t=<s> phase=<PHASE>` followed by the matrix rows or a single
/// `unit <id> temp=<x.x> C` line.
std::string frame_to_text(const Frame& frame);

/// Frames joined by `---` separator lines.
std::string frames_to_text(const std::vector<Frame>& frames);

/// `loop,phase,sim_time_s` header plus one row per transition.
std::string phase_log_to_csv(const std::vector<PhaseLogEntry>& log);

}  // namespace algoart::gridsim
