#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace qig {

// SplitMix64: deterministic generator with a single 64-bit word of state.
// Every sampler in the library draws from one of these, and trial loops
// derive an independent child stream per trial so runs are bit-reproducible
// regardless of how many draws each trial consumes.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1), 53-bit resolution
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in (0, 1], safe as a log argument
    double next_open() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }

    // standard normal pair via Box-Muller
    std::pair<double, double> next_gaussian_pair() {
        double u = next_open();
        double v = next_double();
        double r = std::sqrt(-2.0 * std::log(u));
        double a = 6.283185307179586 * v;
        return {r * std::cos(a), r * std::sin(a)};
    }

    double next_gaussian() { return next_gaussian_pair().first; }

    // child generator; advances this one
    SplitMix64 split() { return SplitMix64(next_u64()); }

    // seed of the independent stream for trial `stream` of a run seeded
    // with `seed`; does not depend on draw order of other trials
    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 mixer(seed ^ (0x9e3779b97f4a7c15ull * (stream + 1)));
        return mixer.next_u64();
    }

    static SplitMix64 for_trial(std::uint64_t seed, std::uint64_t stream) {
        return SplitMix64(derive_seed(seed, stream));
    }

private:
    std::uint64_t state_;
};

}  // namespace qig
