#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hcsir {

// One splitmix64 round; also used to mix seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Stream seed for work unit `index` under `master`. Two independent mixing
// rounds keep streams of adjacent indices uncorrelated.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t s = master ^ (index * 0xd1b54a32d192ed03ULL + 0x2545f4914f6cdd1dULL);
    std::uint64_t a = splitmix64(s);
    return splitmix64(s) ^ a;
}

// mt19937_64 plus inverse-CDF transforms. The engine is fully specified by
// the standard and the transforms avoid std::*_distribution, whose output is
// implementation-defined, so streams are bit-identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform on (0, 1]; never returns 0 so log() is safe.
    double uniform() {
        return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    }

    double exponential(double rate) { return -std::log(uniform()) / rate; }

    bool bernoulli(double p) { return uniform() <= p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace hcsir
