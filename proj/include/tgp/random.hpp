#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace tgp {

// Seeded generator shared by every stochastic operation of a run.
// All draws are derived from raw 64-bit mt19937_64 output, so streams are
// reproducible across standard libraries (the std distributions are not).
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed);

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next() { return engine_(); }

    // Uniform on [0, 1).
    double uniform();

    // Uniform on {0, ..., n - 1}; n must be positive.
    std::size_t index(std::size_t n);

    bool coin() { return (engine_() >> 63) != 0; }

    bool bernoulli(double p) { return uniform() < p; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace tgp
