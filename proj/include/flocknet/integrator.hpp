#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "flocknet/model.hpp"
#include "flocknet/rng.hpp"

namespace flocknet {

enum class Scheme { improved_em, euler_maruyama };
const char* to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);

struct StepperConfig {
    double dt = 0.0125;
    std::uint64_t seed = 0;
    Scheme scheme = Scheme::improved_em;
};

// One predictor-corrector update of a generic state vector:
//   k1 = f(x) dt + g(x) (dW - S sqrt(dt))
//   k2 = f(x + k1) dt + g(x + k1) (dW + S sqrt(dt))
//   x <- x + (k1 + k2) / 2
// f and g write their output into the provided span. One (dW, S) pair drives
// the whole vector. With g = 0 this is the classical Heun scheme.
template <class F, class G>
void improved_em_update(std::span<double> state, F&& f, G&& g, double dt, double dw, int s_sign,
                        std::span<double> k1, std::span<double> k2, std::span<double> fbuf,
                        std::span<double> gbuf, std::span<double> xtmp) {
    const std::size_t m = state.size();
    const double root_dt = std::sqrt(dt);
    const double noise_lo = dw - s_sign * root_dt;
    const double noise_hi = dw + s_sign * root_dt;
    f(std::span<const double>(state), fbuf);
    g(std::span<const double>(state), gbuf);
    for (std::size_t i = 0; i < m; ++i) k1[i] = fbuf[i] * dt + gbuf[i] * noise_lo;
    for (std::size_t i = 0; i < m; ++i) xtmp[i] = state[i] + k1[i];
    f(std::span<const double>(xtmp), fbuf);
    g(std::span<const double>(xtmp), gbuf);
    for (std::size_t i = 0; i < m; ++i) k2[i] = fbuf[i] * dt + gbuf[i] * noise_hi;
    for (std::size_t i = 0; i < m; ++i) state[i] += 0.5 * (k1[i] + k2[i]);
}

template <class F, class G>
void euler_maruyama_update(std::span<double> state, F&& f, G&& g, double dt, double dw,
                           std::span<double> fbuf, std::span<double> gbuf) {
    const std::size_t m = state.size();
    f(std::span<const double>(state), fbuf);
    g(std::span<const double>(state), gbuf);
    for (std::size_t i = 0; i < m; ++i) state[i] += fbuf[i] * dt + gbuf[i] * dw;
}

// Reusable buffers for stepping one swarm realization.
class Stepper {
public:
    Stepper(const ModelParams& params, StepperConfig cfg);

    // Advance the state in place by one step, drawing (dW, S) from rng.
    // Throws BlowUpError when the result has a non-finite coordinate.
    void step_in_place(SwarmState& s, SplitMix64& rng);

    const StepperConfig& config() const { return cfg_; }

private:
    const ModelParams* params_;
    StepperConfig cfg_;
    std::vector<double> flat_, k1_, k2_, fbuf_, gbuf_, xtmp_, xbar_;
};

// Single-step convenience: returns the advanced state.
SwarmState step(const ModelParams& params, const SwarmState& s, const StepperConfig& cfg,
                SplitMix64& rng);

// Requested sample times snapped to the dt grid.
struct SampleGrid {
    std::vector<std::int64_t> steps;   // ascending, unique
    std::vector<double> times;         // t0 + step * dt
    std::vector<std::string> warnings; // one entry per time that had to snap
};
SampleGrid snap_sample_times(double t0, double dt, std::span<const double> requested);

// Integrate from `initial` to t_end, returning states at the sample times
// (snapped to the step grid). The RNG stream is fully determined by cfg.seed;
// realization substreams are the caller's concern (pass a substream-seeded
// rng via the *_with_rng variant).
std::vector<SwarmState> integrate(const ModelParams& params, const SwarmState& initial,
                                  const StepperConfig& cfg, double t_end,
                                  std::span<const double> sample_times);

std::vector<SwarmState> integrate_with_rng(const ModelParams& params, const SwarmState& initial,
                                           const StepperConfig& cfg, double t_end,
                                           std::span<const double> sample_times, SplitMix64& rng,
                                           std::vector<std::string>* warnings = nullptr);

}  // namespace flocknet
