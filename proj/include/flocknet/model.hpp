#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flocknet/comm_kernel.hpp"
#include "flocknet/graph.hpp"
#include "flocknet/simd/backend.hpp"

namespace flocknet {

// One realization of the swarm. Storage is component-major: component k of
// agent i lives at index k * n + i of x and v.
struct SwarmState {
    int n = 0;
    int dim = 0;
    double t = 0.0;
    std::vector<double> x;
    std::vector<double> v;

    SwarmState() = default;
    SwarmState(int n_agents, int d)
        : n(n_agents), dim(d), x(static_cast<std::size_t>(n_agents) * d, 0.0),
          v(static_cast<std::size_t>(n_agents) * d, 0.0) {}

    double& xc(int k, int i) { return x[static_cast<std::size_t>(k) * n + i]; }
    double xc(int k, int i) const { return x[static_cast<std::size_t>(k) * n + i]; }
    double& vc(int k, int i) { return v[static_cast<std::size_t>(k) * n + i]; }
    double vc(int k, int i) const { return v[static_cast<std::size_t>(k) * n + i]; }

    bool all_finite() const;
};

// Everything that defines the dynamics: interaction strengths, the three
// networks, the two communication weights, and the target configuration.
// The theorems ask for coupling > 0 and control_strength > 0; zero values
// are accepted here so frozen-dynamics and no-control studies run, and the
// hypothesis checks report the violation instead.
struct ModelParams {
    int n_agents = 0;
    int dim = 0;
    double coupling = 0.0;          // K
    double control_strength = 0.0;  // M
    double noise_strength = 0.0;    // sigma
    Graph graph_psi;                // alignment network
    Graph graph_phi;                // control network
    Graph graph_noise;              // noise network
    CommKernel psi;                 // alignment weight, argument |x_j - x_i|
    CommKernel phi;                 // control weight, argument |xbar_j - xbar_i|^2
    std::vector<double> targets;    // z, component-major

    kern::Backend backend = kern::Backend::scalar;

    static ModelParams create(int n_agents, int dim, double coupling, double control_strength,
                              double noise_strength, Graph g_psi, Graph g_phi, Graph g_noise,
                              CommKernel psi, CommKernel phi, std::vector<double> targets,
                              kern::Backend backend = kern::best_backend());

    std::span<const double> target_component(int k) const {
        return {targets.data() + static_cast<std::size_t>(k) * n_agents,
                static_cast<std::size_t>(n_agents)};
    }
    // Mean target position, one entry per component.
    std::vector<double> target_average() const;
};

// Control signal u: row i sums phi(|xbar_j - xbar_i|^2) (xbar_j - xbar_i)
// over the control-network neighbors, with xbar = x - z.
void control_raw(const ModelParams& p, std::span<const double> x, std::span<double> out,
                 std::span<double> xbar_scratch);
std::vector<double> control_signal(const ModelParams& p, const SwarmState& s);

// Deterministic part of the dynamics: dx = v,
// dv_i = K sum psi(|x_j - x_i|)(v_j - v_i) + M u_i.
void drift_raw(const ModelParams& p, std::span<const double> x, std::span<const double> v,
               std::span<double> dx, std::span<double> dv, std::span<double> xbar_scratch);
std::pair<std::vector<double>, std::vector<double>> drift(const ModelParams& p, const SwarmState& s);

// Diffusion coefficient: row i is sigma * sum over noise-network neighbors of
// (v_j - v_i). One scalar Brownian increment multiplies every row (common
// noise); this function returns only the coefficient.
void diffusion_raw(const ModelParams& p, std::span<const double> v, std::span<double> out);
std::vector<double> diffusion(const ModelParams& p, const SwarmState& s);

// lambda = psi_min L_{G_psi} K - sigma^2 c_B. May be <= 0; callers decide.
double lambda_constant(const ModelParams& p, Complement conv);

// Coupling threshold (sigma^2 c_B / psi_min)(1 + d(G_psi) |E_psi^c|). When the
// alignment and noise networks coincide the threshold tightens to
// sigma^2 c_B / psi_min; both are reported.
struct CouplingThreshold {
    double general = 0.0;
    std::optional<double> equal_graphs;  // set when graph_psi == graph_noise
    double effective() const { return equal_graphs ? *equal_graphs : general; }
};
CouplingThreshold coupling_threshold(const ModelParams& p, Complement conv);

enum class InitialCondition { trivially_satisfied, satisfied, violated };
const char* to_string(InitialCondition ic);

struct InitialConditionReport {
    InitialCondition status = InitialCondition::trivially_satisfied;
    double lhs = 0.0;      // integral of phi over [0, inf); +inf when divergent
    double rhs_mean = 0.0; // (2/M) E|v0|^2 + sum over control edges of E Phi(|xbar0_ij|^2)
    double rhs_se = 0.0;
};

// Smallness condition on the initial data, expectations estimated as ensemble
// means over the given draws.
InitialConditionReport initial_condition_check(const ModelParams& p,
                                               std::span<const SwarmState> initial_ensemble);

// Constants of the decay analysis. beta is chosen as beta_min * (1 + margin)
// unless overridden; alpha = beta * M / 2 always.
struct AnalysisConstants {
    Complement convention = Complement::with_diagonal;
    double lambda = 0.0;
    double coupling_threshold = 0.0;
    double gamma = 0.0;
    double beta_min = 0.0;
    double beta = 0.0;
    double alpha = 0.0;
    double c0 = 0.0;  // lower sandwich constant: c0 H <= J
    double c1 = 0.0;  // upper sandwich constant: J <= c1 H
    double c2 = 0.0;  // dissipation constant: dJ/dt <= -c2 (xvar + kinetic)
    double p = 0.0;   // envelope prefactor c1/c0
    double q = 0.0;   // envelope rate c2/c1
    bool has_decay = false;  // false when only lambda is meaningful
};

// Throws HypothesisError when lambda <= 0 or phi_min = 0. A beta override
// below the admissible infimum is rejected for the same reason.
AnalysisConstants analysis_constants(const ModelParams& p, Complement conv,
                                     double beta_margin = 1e-6,
                                     std::optional<double> beta_override = std::nullopt);

// lambda and convention only, for exploratory runs where the decay
// hypotheses fail but diagnostics are still wanted.
AnalysisConstants analysis_lambda_only(const ModelParams& p, Complement conv);

}  // namespace flocknet
