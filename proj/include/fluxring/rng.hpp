#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace fluxring {

// Seeded generator with hand-rolled variates. The mt19937_64 stream is fixed
// by the standard, but the std distributions are not; mapping engine words to
// doubles ourselves keeps output byte-identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform on [0, 1), 53-bit resolution
    double uniform()
    {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    // exponential with the given mean (inversion method)
    double exponential(double mean)
    {
        return -mean * std::log1p(-uniform());
    }

    bool coin() { return uniform() < 0.5; }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

}  // namespace fluxring
