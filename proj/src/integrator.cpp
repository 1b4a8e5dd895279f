#include "flocknet/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "flocknet/errors.hpp"

namespace flocknet {

const char* to_string(Scheme s) {
    return s == Scheme::improved_em ? "improved_em" : "euler_maruyama";
}

Scheme scheme_from_string(const std::string& s) {
    if (s == "improved_em") return Scheme::improved_em;
    if (s == "euler_maruyama") return Scheme::euler_maruyama;
    throw ConfigError("unknown scheme '" + s + "' (expected improved_em or euler_maruyama)");
}

Stepper::Stepper(const ModelParams& params, StepperConfig cfg) : params_(&params), cfg_(cfg) {
    if (!(cfg_.dt > 0.0)) throw Error("stepper: dt must be positive");
    const std::size_t m = 2 * static_cast<std::size_t>(params.n_agents) * params.dim;
    k1_.resize(m);
    k2_.resize(m);
    fbuf_.resize(m);
    gbuf_.resize(m);
    xtmp_.resize(m);
    xbar_.resize(m / 2);
}

void Stepper::step_in_place(SwarmState& s, SplitMix64& rng) {
    const std::size_t nd = s.x.size();
    const std::size_t m = 2 * nd;
    // Flat layout [x | v] so the generic update treats the pair as one vector.
    std::vector<double> flat(m);
    std::copy(s.x.begin(), s.x.end(), flat.begin());
    std::copy(s.v.begin(), s.v.end(), flat.begin() + nd);

    const ModelParams& p = *params_;
    auto f = [&](std::span<const double> st, std::span<double> out) {
        drift_raw(p, st.subspan(0, nd), st.subspan(nd, nd), out.subspan(0, nd),
                  out.subspan(nd, nd), xbar_);
    };
    auto g = [&](std::span<const double> st, std::span<double> out) {
        std::fill(out.begin(), out.begin() + nd, 0.0);
        diffusion_raw(p, st.subspan(nd, nd), out.subspan(nd, nd));
    };

    const double dw = std::sqrt(cfg_.dt) * rng.normal();
    if (cfg_.scheme == Scheme::improved_em) {
        const int sgn = rng.sign();
        improved_em_update(std::span<double>(flat), f, g, cfg_.dt, dw, sgn, k1_, k2_, fbuf_,
                           gbuf_, xtmp_);
    } else {
        euler_maruyama_update(std::span<double>(flat), f, g, cfg_.dt, dw, fbuf_, gbuf_);
    }

    std::copy(flat.begin(), flat.begin() + nd, s.x.begin());
    std::copy(flat.begin() + nd, flat.end(), s.v.begin());
    s.t += cfg_.dt;
    if (!s.all_finite()) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6f", s.t);
        throw BlowUpError(std::string("realization blew up: non-finite state at t = ") + buf, s.t);
    }
}

SwarmState step(const ModelParams& params, const SwarmState& s, const StepperConfig& cfg,
                SplitMix64& rng) {
    Stepper st(params, cfg);
    SwarmState out = s;
    st.step_in_place(out, rng);
    return out;
}

SampleGrid snap_sample_times(double t0, double dt, std::span<const double> requested) {
    SampleGrid grid;
    for (double t : requested) {
        const auto k = static_cast<std::int64_t>(std::llround((t - t0) / dt));
        if (k < 0) throw Error("sample time " + std::to_string(t) + " precedes the initial time");
        const double snapped = t0 + static_cast<double>(k) * dt;
        if (std::abs(snapped - t) > 1e-9 * std::max(1.0, std::abs(t))) {
            char buf[128];
            std::snprintf(buf, sizeof(buf), "sample time %.9g is not on the dt grid; snapped to %.9g",
                          t, snapped);
            grid.warnings.emplace_back(buf);
        }
        grid.steps.push_back(k);
        grid.times.push_back(snapped);
    }
    // ascending, unique
    std::vector<std::size_t> order(grid.steps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return grid.steps[a] < grid.steps[b]; });
    SampleGrid sorted;
    sorted.warnings = std::move(grid.warnings);
    for (std::size_t idx : order) {
        if (!sorted.steps.empty() && sorted.steps.back() == grid.steps[idx]) continue;
        sorted.steps.push_back(grid.steps[idx]);
        sorted.times.push_back(grid.times[idx]);
    }
    return sorted;
}

std::vector<SwarmState> integrate_with_rng(const ModelParams& params, const SwarmState& initial,
                                           const StepperConfig& cfg, double t_end,
                                           std::span<const double> sample_times, SplitMix64& rng,
                                           std::vector<std::string>* warnings) {
    SampleGrid grid = snap_sample_times(initial.t, cfg.dt, sample_times);
    if (warnings) warnings->insert(warnings->end(), grid.warnings.begin(), grid.warnings.end());
    const auto total_steps =
        grid.steps.empty() ? 0 : grid.steps.back();
    if (!grid.times.empty() && grid.times.back() > t_end + 1e-9 * std::max(1.0, std::abs(t_end)))
        throw Error("sample times extend past t_end");

    std::vector<SwarmState> out;
    out.reserve(grid.steps.size());
    Stepper stepper(params, cfg);
    SwarmState cur = initial;
    std::size_t next = 0;
    for (std::int64_t k = 0; k <= total_steps; ++k) {
        cur.t = initial.t + static_cast<double>(k) * cfg.dt;  // avoid accumulated drift
        while (next < grid.steps.size() && grid.steps[next] == k) {
            out.push_back(cur);
            out.back().t = grid.times[next];
            ++next;
        }
        if (k == total_steps) break;
        stepper.step_in_place(cur, rng);
    }
    return out;
}

std::vector<SwarmState> integrate(const ModelParams& params, const SwarmState& initial,
                                  const StepperConfig& cfg, double t_end,
                                  std::span<const double> sample_times) {
    SplitMix64 rng(cfg.seed);
    return integrate_with_rng(params, initial, cfg, t_end, sample_times, rng);
}

}  // namespace flocknet
