#pragma once

#include <string>
#include <vector>

namespace flocknet {

enum class KernelForm { power_shift, ckpp, constant };

// Weight evaluation parameters in the flat form the force kernels consume.
// squared_arg distinguishes alignment-style weights, which see the plain
// pairwise distance, from control-style weights, which see its square.
struct WeightSpec {
    KernelForm form = KernelForm::constant;
    double a = 0.0;  // power_shift scale
    double b = 0.0;  // power_shift exponent / ckpp exponent
    double c = 0.0;  // power_shift floor / constant value
    bool squared_arg = false;
};

// Evaluate the weight at kernel argument u (already squared or not per the
// caller); shared by CommKernel::eval and the scalar/SIMD force kernels so
// every path runs the same arithmetic.
double weight_value(const WeightSpec& spec, double u);

// Bounded Lipschitz communication weight on [0, inf) with certified analytic
// inf/sup and antiderivative access. Immutable.
class CommKernel {
public:
    // r -> a (1 + r^2)^(-b) + c, a >= 0, b > 0, c >= 0.
    static CommKernel power_shift(double a, double b, double c);
    // r -> (1 + r)^(-beta), beta > 0.
    static CommKernel ckpp(double beta);
    // r -> value, value >= 0.
    static CommKernel constant(double value);

    KernelForm form() const { return spec_.form; }
    double param_a() const { return spec_.a; }
    double param_b() const { return spec_.b; }
    double param_c() const { return spec_.c; }

    // Pointwise value; rejects negative r.
    double eval(double r) const;
    double operator()(double r) const { return eval(r); }

    double inf() const { return inf_; }  // analytic infimum over [0, inf)
    double sup() const { return sup_; }  // analytic supremum over [0, inf)

    // Phi(r) = integral of the kernel over [0, r]. Closed form where one
    // exists; otherwise adaptive quadrature to abs tol 1e-10.
    double antiderivative(double r) const;

    // True iff the integral over [0, inf) diverges.
    bool tail_integral_diverges() const;
    // The integral over [0, inf); +inf when it diverges.
    double tail_integral() const;

    WeightSpec weight_spec(bool squared_arg) const;

    // Config-file syntax: "power_shift(1.0, 0.25, 0.3)", "ckpp(2)",
    // "constant(0.5)".
    std::string to_config_string() const;
    static CommKernel parse(const std::string& text);

    bool operator==(const CommKernel& o) const;

private:
    CommKernel() = default;
    WeightSpec spec_;
    double inf_ = 0.0, sup_ = 0.0;
};

// Lazily grown uniform-grid cache of Phi for one kernel, for the hot loops
// that evaluate the edge potential at every sample time. Grid nodes are
// accumulated panel-by-panel with a tight per-panel tolerance; queries add a
// single Gauss panel from the nearest node below. Not thread-safe: workers
// keep their own instance. Grid content depends only on the largest argument
// seen, so results are identical regardless of query order.
class PhiCache {
public:
    explicit PhiCache(const CommKernel& kernel, double grid_step = 4.0);
    double operator()(double r);

private:
    const CommKernel* kernel_;
    double step_;
    bool closed_form_;
    std::vector<double> nodes_;  // nodes_[k] = Phi(k * step_)
};

}  // namespace flocknet
