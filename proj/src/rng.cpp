#include "flocknet/rng.hpp"

#include <cmath>

namespace flocknet {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

constexpr double kInvSqrt2Pi = 0.3989422804014326779;

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

}  // namespace

SplitMix64 SplitMix64::substream(std::uint64_t seed, std::uint64_t stream) {
    // Double mixing keeps substreams from landing on shifted copies of the
    // same splitmix walk.
    return SplitMix64(mix64(mix64(seed) ^ mix64(stream + 0xD1B54A32D192ED03ull)));
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += kGolden);
    return mix64(z);
}

double SplitMix64::uniform01() {
    // 53 high bits, centered in the bin: never returns 0 or 1.
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
}

double SplitMix64::uniform_symmetric(double half_width) {
    return (2.0 * uniform01() - 1.0) * half_width;
}

double SplitMix64::normal() { return inverse_normal_cdf(uniform01()); }

int SplitMix64::sign() { return (next() >> 63) ? 1 : -1; }

double normal_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

double inverse_normal_cdf(double u) {
    if (!(u > 0.0 && u < 1.0)) {
        if (u == 0.0) return -HUGE_VAL;
        if (u == 1.0) return HUGE_VAL;
        return NAN;
    }
    // Exploit symmetry: solve in the lower tail where erfc is well conditioned.
    // For u in [0.5, 1), 1-u is exact (both operands share a binade).
    if (u > 0.5) return -inverse_normal_cdf(1.0 - u);
    if (u == 0.5) return 0.0;

    // Bracket: normal_cdf(-t) < exp(-t*t/2) for t > 0 guarantees lo is below
    // the quantile for lo = -(sqrt(-2 log u) + 2).
    double lo = -(std::sqrt(-2.0 * std::log(u)) + 2.0);
    double hi = 0.0;
    double x = -std::sqrt(-2.0 * std::log(2.0 * u));  // crude tail start
    if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);

    for (int it = 0; it < 100; ++it) {
        const double f = normal_cdf(x) - u;
        if (f > 0.0) hi = x; else lo = x;
        const double step = f / normal_pdf(x);
        double xn = x - step;
        if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);  // safeguard by bisection
        const bool done = std::abs(xn - x) <= 1e-15 * (std::abs(x) + 1e-3);
        x = xn;
        if (done) break;
    }
    return x;
}

}  // namespace flocknet
