#include "algoart/stochastics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "algoart/errors.hpp"

namespace algoart::stochastics {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    state += kGoldenGamma;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

RandomStream::RandomStream(Seed seed) noexcept {
    std::uint64_t x = seed.value;
    for (auto& word : s_) {
        word = splitmix64(x);
    }
}

RandomStream RandomStream::for_lane(Seed seed, std::uint64_t lane) noexcept {
    std::uint64_t lane_state = lane + kGoldenGamma;
    const std::uint64_t mixed = seed.value ^ splitmix64(lane_state);
    std::uint64_t seed_state = mixed;
    return RandomStream(Seed{splitmix64(seed_state)});
}

std::uint64_t RandomStream::next_u64() noexcept {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    ++draws_;
    return result;
}

double RandomStream::next_unit() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

RandomStream rng_new(Seed seed) noexcept { return RandomStream(seed); }

void UniformRange::validate() const {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw ConfigError("uniform range bounds must be finite");
    }
    if (lo > hi) {
        throw ConfigError("uniform range requires lo <= hi");
    }
}

DiscreteDistribution::DiscreteDistribution(std::vector<double> weights, std::vector<std::string> labels)
    : weights_(std::move(weights)), labels_(std::move(labels)) {
    if (weights_.empty()) {
        throw ConfigError("distribution needs at least one weight");
    }
    if (!labels_.empty() && labels_.size() != weights_.size()) {
        throw ConfigError("distribution has " + std::to_string(weights_.size()) + " weights but " +
                          std::to_string(labels_.size()) + " labels");
    }
    double total = 0.0;
    for (double w : weights_) {
        if (!std::isfinite(w) || w < 0.0) {
            throw ConfigError("distribution weights must be finite and non-negative");
        }
        total += w;
    }
    if (total <= 0.0) {
        throw ConfigError("distribution needs at least one strictly positive weight");
    }
    for (double& w : weights_) {
        w /= total;
    }
    cumulative_.resize(weights_.size());
    std::partial_sum(weights_.begin(), weights_.end(), cumulative_.begin());
}

DiscreteDistribution DiscreteDistribution::uniform(std::size_t n) {
    return DiscreteDistribution(std::vector<double>(n, 1.0));
}

std::size_t DiscreteDistribution::index_for(double u) const noexcept {
    // First outcome whose cumulative mass exceeds u. Rounding can leave the
    // final cumulative entry just under 1, so fall back to the last positive weight.
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it != cumulative_.end()) {
        return static_cast<std::size_t>(it - cumulative_.begin());
    }
    std::size_t i = weights_.size();
    while (i > 0 && weights_[i - 1] == 0.0) {
        --i;
    }
    return i - 1;
}

double sample_uniform(RandomStream& stream, const UniformRange& range) {
    range.validate();
    const double u = stream.next_unit();
    if (range.lo == range.hi) {
        return range.lo;
    }
    const double v = range.lo + u * (range.hi - range.lo);
    // lo + u*(hi-lo) can round up to hi for u close to 1.
    return v < range.hi ? v : std::nextafter(range.hi, range.lo);
}

std::size_t sample_discrete(RandomStream& stream, const DiscreteDistribution& f) noexcept {
    return f.index_for(stream.next_unit());
}

DiscreteDistribution triangular_gray_distribution(std::size_t levels) {
    if (levels < 3) {
        throw ConfigError("triangular gray distribution needs at least 3 levels");
    }
    const double mid = static_cast<double>(levels - 1) / 2.0;
    const double peak = static_cast<double>(levels / 2 + 1);
    std::vector<double> weights(levels);
    for (std::size_t i = 0; i < levels; ++i) {
        weights[i] = peak - std::abs(static_cast<double>(i) - mid);
    }
    return DiscreteDistribution(std::move(weights));
}

}  // namespace algoart::stochastics
