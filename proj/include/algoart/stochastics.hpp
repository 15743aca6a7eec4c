#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace algoart::stochastics {

struct Seed {
    std::uint64_t value = 0;
};

/// SplitMix64 step: advances `state` by the golden gamma and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// xoshiro256++ (Blackman & Vigna), state seeded by four SplitMix64 outputs.
///
/// Outputs are fully determined by the seed on every platform: the generator
/// uses only 64-bit unsigned arithmetic, and doubles are built from the top
/// 53 bits. Single owner; copying forks an identical stream.
class RandomStream {
public:
    explicit RandomStream(Seed seed) noexcept;

    /// Independent stream for parallel lane `lane`, derived from (seed, lane).
    static RandomStream for_lane(Seed seed, std::uint64_t lane) noexcept;

    std::uint64_t next_u64() noexcept;

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() noexcept;

    /// Number of 64-bit draws taken so far.
    std::uint64_t draws() const noexcept { return draws_; }

private:
    std::array<std::uint64_t, 4> s_{};
    std::uint64_t draws_ = 0;
};

RandomStream rng_new(Seed seed) noexcept;

struct UniformRange {
    double lo = 0.0;
    double hi = 1.0;

    /// Throws ConfigError unless lo <= hi and both are finite.
    void validate() const;
};

/// Discrete law F over ordered outcomes. Weights are normalized on construction.
class DiscreteDistribution {
public:
    /// Rejects empty, negative, non-finite or all-zero weight lists, and label
    /// lists whose length differs from the weights (ConfigError).
    explicit DiscreteDistribution(std::vector<double> weights, std::vector<std::string> labels = {});

    /// Equal weights over `n` outcomes.
    static DiscreteDistribution uniform(std::size_t n);

    std::size_t size() const noexcept { return weights_.size(); }
    std::span<const double> weights() const noexcept { return weights_; }
    std::span<const std::string> labels() const noexcept { return labels_; }

    /// Index of the outcome owning cumulative probability `u` in [0, 1).
    /// Zero-weight outcomes are never selected.
    std::size_t index_for(double u) const noexcept;

private:
    std::vector<double> weights_;
    std::vector<double> cumulative_;
    std::vector<std::string> labels_;
};

/// Value in [lo, hi); returns lo when lo == hi. Advances the stream once;
/// throws ConfigError for an invalid range before drawing.
double sample_uniform(RandomStream& stream, const UniformRange& range);

/// Inverse-CDF draw: exactly one stream advance per call.
std::size_t sample_discrete(RandomStream& stream, const DiscreteDistribution& f) noexcept;

/// Symmetric triangle over `levels` gray levels: weight_i proportional to
/// floor(levels/2) + 1 - |i - (levels-1)/2|. Throws ConfigError for levels < 3.
DiscreteDistribution triangular_gray_distribution(std::size_t levels);

}  // namespace algoart::stochastics
