#pragma once

#include <cstdint>
#include <random>

namespace tap {

// Finalizer step of splitmix64; used for seed mixing and sub-stream derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Deterministic seed for a child stream. Distinct keys give independent streams.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t key) {
    return splitmix64(base ^ splitmix64(key));
}

// Seeded random stream. All draws go through uniform01() so the produced
// sequence depends only on the mt19937_64 output, which the standard pins down;
// results are identical across platforms and standard libraries.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

    std::uint64_t seed() const { return seed_; }

    // Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform double in [lo, hi).
    double uniform_real(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    // Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi) {
        const int span = hi - lo + 1;
        int v = lo + static_cast<int>(uniform01() * static_cast<double>(span));
        return v > hi ? hi : v;
    }

    // Independent child stream; key selection is the caller's namespace.
    RngStream child(std::uint64_t key) const { return RngStream(derive_seed(seed_, key)); }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace tap
