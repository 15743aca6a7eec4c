#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace algoart::cli {

/// Filesystem failure (exit code 1).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& bytes);

/// Directory used for outputs whose path was not given: $ALGOART_OUT_DIR or ".".
std::filesystem::path default_output_dir();

std::filesystem::path bundled_data(const std::string& name);

struct HatchOptions {
    std::string mode = "uniform";
    std::uint64_t seed = 0;
    int zones = 20;
    int runs = 1;
    double canvas_w = 192.0;
    double canvas_h = 290.0;
    double width_min = 10.0;
    double width_max = 100.0;
    double height_min = 10.0;
    double height_max = 150.0;
    int lines_min = 2;
    int lines_max = 40;
    int rows = 50;
    int cols = 50;
    double cell = 3.8;
    int levels = 5;
    int lines_per_level = 2;
    std::string weights;
    std::string labels;
    double resolution = 2.0;
    std::string output;
    std::string dump;
};

struct PolygonOptions {
    int vertices = 8;
    bool open = false;
    std::uint64_t seed = 0;
    double margin = 20.0;
    std::string output;
    std::string dump;
};

struct KdvOptions {
    std::string profile = "soliton";
    std::string input;
    std::size_t n = 512;
    double length = 40.0;
    double speed = 1.0;
    double x0 = 10.0;
    double t_end = 1.0;
    double dt = 0.0;
    int snapshots = 10;
    std::string output;
    std::string log;
};

struct WavefieldOptions {
    std::string spectrum;
    std::uint64_t seed = 0;
    std::size_t rows = 64;
    std::size_t cols = 64;
    double spacing = 4.0;
    double t_end = 10.0;
    double dt = 1.0;
    double h_ref = 10.0;
    std::string format = "all";
    std::string output;
};

struct GridsimOptions {
    std::string spectrum;
    std::uint64_t seed = 0;
    int units = 32;
    int modules = 8;
    std::size_t rows = 64;
    std::size_t cols = 8;
    double spacing = 8.0;
    double dt_wave = 1.0;
    double h_ref = 10.0;
    double alpha = 1.0;
    double beta = 0.03;
    double gamma = 0.3;
    double t_env = 25.0;
    double t_throttle = 60.0;
    double p0 = 2.0;
    std::size_t run_iterations = 80;
    int loops = 1;
    double loop_target = 1200.0;
    std::size_t checkpoint = 500;
    std::string output;
};

struct CatalogOptions {
    std::string input;
    std::vector<std::string> attrs;
    std::string chapter;
    int year_min = 0;
    int year_max = 0;
    std::string title;
    std::string output;
    std::string records;
};

int cmd_hatch(const HatchOptions& opt);
int cmd_polygon(const PolygonOptions& opt);
int cmd_kdv(const KdvOptions& opt);
int cmd_wavefield(const WavefieldOptions& opt);
int cmd_gridsim(const GridsimOptions& opt);
int cmd_catalog(const CatalogOptions& opt);

}  // namespace algoart::cli
