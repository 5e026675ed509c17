#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace mqpc {

// splitmix64 step; used to turn (master seed, counter) pairs into
// independent stream seeds without consuming state from any engine.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Counter-based seed derivation: the seed of stream `index` depends only on
// (master, index), so growing a campaign never perturbs earlier streams.
inline std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ splitmix64(index + 1));
}

// Deterministic random source. One instance per protocol run, threaded
// explicitly through every operation that draws randomness. Integer and
// unit-interval draws are implemented directly on the engine output so the
// byte stream does not depend on the standard library's distribution
// implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Unbiased draw from [0, bound) by rejection.
    int uniform_int(int bound) {
        if (bound <= 0) throw std::invalid_argument("Rng::uniform_int: bound must be positive");
        const auto span = static_cast<std::uint64_t>(bound);
        std::uint64_t x, r;
        do {
            x = next_u64();
            r = x % span;
        } while (x - r > std::uint64_t(0) - span);
        return static_cast<int>(r);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool coin() { return (next_u64() & 1u) != 0; }

private:
    std::mt19937_64 engine_;
};

} // namespace mqpc
