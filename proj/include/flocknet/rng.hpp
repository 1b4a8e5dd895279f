#pragma once

#include <cstdint>

namespace flocknet {

// Splittable 64-bit generator (splitmix64 core). Realization r of a run uses
// the substream derived from (seed, r); substream keys are double-mixed so
// distinct streams are decorrelated. Sequences are reproducible bit-for-bit
// for a fixed build.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    // Substream k of a master seed.
    static SplitMix64 substream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next();

    // Uniform on the open interval (0, 1), 53-bit resolution.
    double uniform01();

    // Uniform on (-half_width, half_width).
    double uniform_symmetric(double half_width);

    // Standard normal via inverse-CDF transform of uniform01().
    double normal();

    // Rademacher +/-1.
    int sign();

private:
    std::uint64_t state_;
};

// Quantile function of the standard normal, u in (0, 1). Bracketed Newton on
// the erfc-based CDF; accurate to ~1e-15 over the full open interval.
double inverse_normal_cdf(double u);

// Standard normal CDF (erfc form), exposed for tests.
double normal_cdf(double x);

}  // namespace flocknet
