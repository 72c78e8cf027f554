#pragma once

#include <cstdint>
#include <initializer_list>

namespace gcut {

/// SplitMix64: a counter-based 64-bit generator. The state advances by a fixed
/// odd increment and each output is a bijective mix of the counter, so streams are
/// reproducible across platforms and languages.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    result_type operator()() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t limit = max() - max() % bound;
        std::uint64_t v;
        do {
            v = (*this)();
        } while (v >= limit);
        return v % bound;
    }

private:
    std::uint64_t state_;
};

/// Child seed for a labelled sub-stream: folds each tag into the parent seed
/// through the SplitMix64 finalizer.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::initializer_list<std::uint64_t> tags) noexcept {
    std::uint64_t h = SplitMix64::mix(parent ^ 0x6a09e667f3bcc909ULL);
    for (std::uint64_t t : tags) {
        h = SplitMix64::mix(h + 0x9e3779b97f4a7c15ULL + SplitMix64::mix(t));
    }
    return h;
}

// Stream tags.
inline constexpr std::uint64_t kStreamTrial = 1;
inline constexpr std::uint64_t kStreamUpstream = 2;
inline constexpr std::uint64_t kStreamDownstream = 3;
inline constexpr std::uint64_t kStreamUncut = 4;
inline constexpr std::uint64_t kStreamGenerator = 5;

}  // namespace gcut
