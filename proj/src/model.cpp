#include "flocknet/model.hpp"

#include <algorithm>
#include <cmath>

#include "flocknet/errors.hpp"
#include "flocknet/simd/edge_kernels.hpp"

namespace flocknet {

bool SwarmState::all_finite() const {
    for (double c : x)
        if (!std::isfinite(c)) return false;
    for (double c : v)
        if (!std::isfinite(c)) return false;
    return std::isfinite(t);
}

ModelParams ModelParams::create(int n_agents, int dim, double coupling, double control_strength,
                                double noise_strength, Graph g_psi, Graph g_phi, Graph g_noise,
                                CommKernel psi, CommKernel phi, std::vector<double> targets,
                                kern::Backend backend) {
    if (n_agents < 1) throw Error("model: n_agents must be positive");
    if (dim < 1) throw Error("model: dim must be positive");
    if (!(coupling >= 0.0)) throw Error("model: coupling must be nonnegative");
    if (!(control_strength >= 0.0)) throw Error("model: control_strength must be nonnegative");
    if (!(noise_strength >= 0.0)) throw Error("model: noise_strength must be nonnegative");
    if (targets.size() != static_cast<std::size_t>(n_agents) * dim)
        throw Error("model: targets must hold n_agents * dim values, got " +
                    std::to_string(targets.size()));

    const auto check_graph = [n_agents](const Graph& g, const char* role) {
        if (g.n_vertices() != n_agents)
            throw Error(std::string("model: ") + role + " graph has " +
                        std::to_string(g.n_vertices()) + " vertices, expected " +
                        std::to_string(n_agents));
        const GraphValidation v = g.validate();
        if (!v.symmetric) throw Error(std::string("model: ") + role + " graph is not symmetric");
        if (!v.connected) throw Error(std::string("model: ") + role + " graph is not connected");
    };
    check_graph(g_psi, "alignment");
    check_graph(g_phi, "control");
    check_graph(g_noise, "noise");

    ModelParams p{n_agents, dim,    coupling,    control_strength, noise_strength,
                  std::move(g_psi), std::move(g_phi), std::move(g_noise),
                  psi,      phi,    std::move(targets), backend};
    return p;
}

std::vector<double> ModelParams::target_average() const {
    std::vector<double> avg(dim, 0.0);
    for (int k = 0; k < dim; ++k) {
        double s = 0.0;
        for (int i = 0; i < n_agents; ++i) s += targets[static_cast<std::size_t>(k) * n_agents + i];
        avg[k] = s / n_agents;
    }
    return avg;
}

namespace {

void compute_xbar(const ModelParams& p, std::span<const double> x, std::span<double> xbar) {
    for (std::size_t i = 0; i < x.size(); ++i) xbar[i] = x[i] - p.targets[i];
}

}  // namespace

void control_raw(const ModelParams& p, std::span<const double> x, std::span<double> out,
                 std::span<double> xbar_scratch) {
    std::fill(out.begin(), out.end(), 0.0);
    compute_xbar(p, x, xbar_scratch);
    kern::edge_force(p.backend, p.graph_phi.adjacency(), xbar_scratch, xbar_scratch, p.n_agents,
                     p.dim, p.phi.weight_spec(/*squared_arg=*/true), 1.0, out);
}

std::vector<double> control_signal(const ModelParams& p, const SwarmState& s) {
    std::vector<double> out(s.x.size()), xbar(s.x.size());
    control_raw(p, s.x, out, xbar);
    return out;
}

void drift_raw(const ModelParams& p, std::span<const double> x, std::span<const double> v,
               std::span<double> dx, std::span<double> dv, std::span<double> xbar_scratch) {
    std::copy(v.begin(), v.end(), dx.begin());
    std::fill(dv.begin(), dv.end(), 0.0);
    kern::edge_force(p.backend, p.graph_psi.adjacency(), x, v, p.n_agents, p.dim,
                     p.psi.weight_spec(/*squared_arg=*/false), p.coupling, dv);
    compute_xbar(p, x, xbar_scratch);
    kern::edge_force(p.backend, p.graph_phi.adjacency(), xbar_scratch, xbar_scratch, p.n_agents,
                     p.dim, p.phi.weight_spec(/*squared_arg=*/true), p.control_strength, dv);
}

std::pair<std::vector<double>, std::vector<double>> drift(const ModelParams& p, const SwarmState& s) {
    std::vector<double> dx(s.x.size()), dv(s.x.size()), xbar(s.x.size());
    drift_raw(p, s.x, s.v, dx, dv, xbar);
    return {std::move(dx), std::move(dv)};
}

void diffusion_raw(const ModelParams& p, std::span<const double> v, std::span<double> out) {
    std::fill(out.begin(), out.end(), 0.0);
    kern::edge_force(p.backend, p.graph_noise.adjacency(), v, v, p.n_agents, p.dim,
                     CommKernel::constant(1.0).weight_spec(false), p.noise_strength, out);
}

std::vector<double> diffusion(const ModelParams& p, const SwarmState& s) {
    std::vector<double> out(s.x.size());
    diffusion_raw(p, s.v, out);
    return out;
}

double lambda_constant(const ModelParams& p, Complement conv) {
    const double l_psi = p.graph_psi.connectivity_constant(conv).value();
    const double c_b = static_cast<double>(p.graph_noise.max_degree());
    return p.psi.inf() * l_psi * p.coupling - p.noise_strength * p.noise_strength * c_b;
}

CouplingThreshold coupling_threshold(const ModelParams& p, Complement conv) {
    const double psi_min = p.psi.inf();
    if (psi_min <= 0.0)
        throw HypothesisError("coupling threshold undefined: psi_min = 0 violates the positive lower bound on the alignment weight");
    const double c_b = static_cast<double>(p.graph_noise.max_degree());
    const double sig2 = p.noise_strength * p.noise_strength;
    CouplingThreshold out;
    out.general = sig2 * c_b / psi_min *
                  static_cast<double>(p.graph_psi.connectivity_constant(conv).denominator);
    if (p.graph_psi == p.graph_noise) out.equal_graphs = sig2 * c_b / psi_min;
    return out;
}

const char* to_string(InitialCondition ic) {
    switch (ic) {
        case InitialCondition::trivially_satisfied: return "trivially_satisfied";
        case InitialCondition::satisfied: return "satisfied";
        case InitialCondition::violated: return "violated";
    }
    return "?";
}

InitialConditionReport initial_condition_check(const ModelParams& p,
                                               std::span<const SwarmState> initial_ensemble) {
    if (initial_ensemble.empty()) throw Error("initial_condition_check: empty ensemble");
    InitialConditionReport rep;
    rep.lhs = p.phi.tail_integral();

    PhiCache phi_int(p.phi);
    const int n = p.n_agents;
    double sum = 0.0, sumsq = 0.0;
    std::vector<double> xbar;
    for (const SwarmState& s : initial_ensemble) {
        xbar.assign(s.x.size(), 0.0);
        compute_xbar(p, s.x, xbar);
        double v2 = 0.0;
        for (double c : s.v) v2 += c * c;
        double pot = 0.0;
        for (const auto& [i, j] : p.graph_phi.edges()) {
            double sq = 0.0;
            for (int k = 0; k < p.dim; ++k) {
                const double d = xbar[static_cast<std::size_t>(k) * n + (j - 1)] -
                                 xbar[static_cast<std::size_t>(k) * n + (i - 1)];
                sq += d * d;
            }
            pot += phi_int(sq);
        }
        const double rhs = (p.control_strength > 0.0 ? 2.0 / p.control_strength * v2
                                                     : (v2 > 0.0 ? HUGE_VAL : 0.0)) +
                           pot;
        sum += rhs;
        sumsq += rhs * rhs;
    }
    const double r = static_cast<double>(initial_ensemble.size());
    rep.rhs_mean = sum / r;
    rep.rhs_se = r > 1.0 ? std::sqrt(std::max(0.0, (sumsq - sum * sum / r) / (r - 1.0)) / r) : 0.0;

    if (p.phi.tail_integral_diverges()) {
        rep.status = InitialCondition::trivially_satisfied;
    } else {
        rep.status = rep.lhs > rep.rhs_mean ? InitialCondition::satisfied : InitialCondition::violated;
    }
    return rep;
}

AnalysisConstants analysis_lambda_only(const ModelParams& p, Complement conv) {
    AnalysisConstants a;
    a.convention = conv;
    a.lambda = lambda_constant(p, conv);
    try {
        a.coupling_threshold = coupling_threshold(p, conv).general;
    } catch (const HypothesisError&) {
        a.coupling_threshold = HUGE_VAL;
    }
    a.has_decay = false;
    return a;
}

AnalysisConstants analysis_constants(const ModelParams& p, Complement conv, double beta_margin,
                                     std::optional<double> beta_override) {
    AnalysisConstants a = analysis_lambda_only(p, conv);
    if (!(a.lambda > 0.0))
        throw HypothesisError("decay constants undefined: lambda = " + std::to_string(a.lambda) +
                              " is not positive (coupling too weak against the noise)");
    const double phi_min = p.phi.inf();
    if (!(phi_min > 0.0))
        throw HypothesisError("decay constants undefined: phi_min = 0 violates the positive lower bound on the control weight");

    const double n = static_cast<double>(p.n_agents);
    const double k_psi_max = p.coupling * p.psi.sup();
    const double l_phi = p.graph_phi.connectivity_constant(conv).value();
    const double m = p.control_strength;
    if (!(m > 0.0))
        throw HypothesisError("decay constants undefined: control_strength must be positive");
    const double lmf = l_phi * m * phi_min;

    a.gamma = lmf / k_psi_max;
    a.beta_min = std::max((2.0 * lmf + n * k_psi_max * k_psi_max) / (4.0 * n * lmf * a.lambda),
                          1.0 / std::sqrt(2.0 * n * m * phi_min * l_phi));
    a.beta = beta_override ? *beta_override : a.beta_min * (1.0 + beta_margin);
    if (!(a.beta > a.beta_min))
        throw HypothesisError("beta override " + std::to_string(a.beta) +
                              " does not exceed the admissible infimum " + std::to_string(a.beta_min));
    a.alpha = a.beta * m / 2.0;

    a.c0 = std::min(4.0 * a.alpha * a.beta * n * phi_min * l_phi - 1.0, a.beta * a.beta) /
           (2.0 * a.beta);
    a.c1 = std::max(2.0 * n * p.phi.sup() * a.alpha + 0.5, a.beta + 0.5);
    const double drain = 2.0 * a.beta * n * a.lambda -
                         (1.0 + n * k_psi_max * k_psi_max / (2.0 * lmf));
    a.c2 = std::min(drain, n * m * phi_min * l_phi / 2.0);
    if (!(a.c0 > 0.0 && a.c2 > 0.0))
        throw HypothesisError("decay constants degenerate: c0 or c2 not positive for beta = " +
                              std::to_string(a.beta));
    a.p = a.c1 / a.c0;
    a.q = a.c2 / a.c1;
    a.has_decay = true;
    return a;
}

}  // namespace flocknet
