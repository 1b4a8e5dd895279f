#include "flocknet/comm_kernel.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "flocknet/errors.hpp"
#include "flocknet/quadrature.hpp"

namespace flocknet {

double weight_value(const WeightSpec& spec, double u) {
    switch (spec.form) {
        case KernelForm::constant:
            return spec.c;
        case KernelForm::power_shift: {
            const double t = 1.0 + u * u;
            double body;
            if (spec.b == 0.25) body = 1.0 / std::sqrt(std::sqrt(t));
            else if (spec.b == 0.5) body = 1.0 / std::sqrt(t);
            else if (spec.b == 1.0) body = 1.0 / t;
            else body = std::pow(t, -spec.b);
            return spec.a * body + spec.c;
        }
        case KernelForm::ckpp: {
            const double t = 1.0 + u;
            if (spec.b == 1.0) return 1.0 / t;
            if (spec.b == 2.0) return 1.0 / (t * t);
            return std::pow(t, -spec.b);
        }
    }
    return 0.0;
}

CommKernel CommKernel::power_shift(double a, double b, double c) {
    if (!(a >= 0.0) || !(b > 0.0) || !(c >= 0.0))
        throw Error("power_shift kernel requires a >= 0, b > 0, c >= 0");
    CommKernel k;
    k.spec_ = {KernelForm::power_shift, a, b, c, false};
    k.sup_ = a + c;  // attained at r = 0, monotone decreasing
    k.inf_ = c;
    return k;
}

CommKernel CommKernel::ckpp(double beta) {
    if (!(beta > 0.0)) throw Error("ckpp kernel requires beta > 0");
    CommKernel k;
    k.spec_ = {KernelForm::ckpp, 0.0, beta, 0.0, false};
    k.sup_ = 1.0;
    k.inf_ = 0.0;
    return k;
}

CommKernel CommKernel::constant(double value) {
    if (!(value >= 0.0)) throw Error("constant kernel requires a nonnegative value");
    CommKernel k;
    k.spec_ = {KernelForm::constant, 0.0, 0.0, value, false};
    k.sup_ = value;
    k.inf_ = value;
    return k;
}

double CommKernel::eval(double r) const {
    if (!(r >= 0.0)) throw Error("kernel argument must be nonnegative, got " + std::to_string(r));
    return weight_value(spec_, r);
}

double CommKernel::antiderivative(double r) const {
    if (!(r >= 0.0)) throw Error("antiderivative argument must be nonnegative, got " + std::to_string(r));
    switch (spec_.form) {
        case KernelForm::constant:
            return spec_.c * r;
        case KernelForm::ckpp: {
            const double beta = spec_.b;
            if (beta == 1.0) return std::log1p(r);
            return (1.0 - std::pow(1.0 + r, 1.0 - beta)) / (beta - 1.0);
        }
        case KernelForm::power_shift: {
            // No elementary antiderivative for general b.
            const WeightSpec s = spec_;
            const double shifted = integrate_adaptive(
                                       [&s](double x) { return weight_value(s, x) - s.c; }, 0.0, r)
                                       .value;
            return shifted + spec_.c * r;  // integrate the floor exactly
        }
    }
    return 0.0;
}

bool CommKernel::tail_integral_diverges() const {
    switch (spec_.form) {
        case KernelForm::constant:
            return spec_.c > 0.0;
        case KernelForm::ckpp:
            return spec_.b <= 1.0;
        case KernelForm::power_shift:
            if (spec_.c > 0.0) return true;
            return spec_.a > 0.0 && spec_.b <= 0.5;
    }
    return false;
}

double CommKernel::tail_integral() const {
    if (tail_integral_diverges()) return std::numeric_limits<double>::infinity();
    switch (spec_.form) {
        case KernelForm::constant:
            return 0.0;  // only the zero kernel converges
        case KernelForm::ckpp:
            return 1.0 / (spec_.b - 1.0);
        case KernelForm::power_shift:
            if (spec_.a == 0.0) return 0.0;
            // integral of (1 + r^2)^(-b) over [0, inf) for b > 1/2
            return spec_.a * 0.5 * std::sqrt(M_PI) * std::tgamma(spec_.b - 0.5) / std::tgamma(spec_.b);
    }
    return 0.0;
}

WeightSpec CommKernel::weight_spec(bool squared_arg) const {
    WeightSpec s = spec_;
    s.squared_arg = squared_arg;
    return s;
}

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

}  // namespace

std::string CommKernel::to_config_string() const {
    switch (spec_.form) {
        case KernelForm::power_shift:
            return "power_shift(" + fmt17(spec_.a) + ", " + fmt17(spec_.b) + ", " + fmt17(spec_.c) + ")";
        case KernelForm::ckpp:
            return "ckpp(" + fmt17(spec_.b) + ")";
        case KernelForm::constant:
            return "constant(" + fmt17(spec_.c) + ")";
    }
    return "";
}

CommKernel CommKernel::parse(const std::string& text) {
    const auto open = text.find('(');
    const auto close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw ConfigError("kernel spec '" + text + "': expected form(name, args...)");
    std::string name = text.substr(0, open);
    // trim
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front()))) name.erase(name.begin());

    std::vector<double> args;
    std::string inner = text.substr(open + 1, close - open - 1);
    std::istringstream is(inner);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(tok, &pos);
        } catch (const std::exception&) {
            throw ConfigError("kernel spec '" + text + "': bad numeric argument '" + tok + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size())
            throw ConfigError("kernel spec '" + text + "': trailing junk in argument '" + tok + "'");
        args.push_back(v);
    }

    if (name == "power_shift") {
        if (args.size() != 3) throw ConfigError("power_shift expects 3 arguments (a, b, c)");
        return power_shift(args[0], args[1], args[2]);
    }
    if (name == "ckpp") {
        if (args.size() != 1) throw ConfigError("ckpp expects 1 argument (beta)");
        return ckpp(args[0]);
    }
    if (name == "constant") {
        if (args.size() != 1) throw ConfigError("constant expects 1 argument (value)");
        return constant(args[0]);
    }
    throw ConfigError("unknown kernel form '" + name + "' (expected power_shift, ckpp, or constant)");
}

bool CommKernel::operator==(const CommKernel& o) const {
    return spec_.form == o.spec_.form && spec_.a == o.spec_.a && spec_.b == o.spec_.b && spec_.c == o.spec_.c;
}

PhiCache::PhiCache(const CommKernel& kernel, double grid_step)
    : kernel_(&kernel),
      step_(grid_step),
      closed_form_(kernel.form() != KernelForm::power_shift) {
    nodes_.push_back(0.0);
}

double PhiCache::operator()(double r) {
    if (closed_form_) return kernel_->antiderivative(r);
    if (!(r >= 0.0)) throw Error("antiderivative argument must be nonnegative, got " + std::to_string(r));
    if (r > 4e6) return kernel_->antiderivative(r);  // off the grid; keeps memory bounded

    const WeightSpec spec = kernel_->weight_spec(false);
    const auto f = [&spec](double x) { return weight_value(spec, x); };
    const std::size_t idx = static_cast<std::size_t>(r / step_);
    while (nodes_.size() <= idx + 1) {
        const double a = step_ * static_cast<double>(nodes_.size() - 1);
        // Per-panel tolerance keeps the accumulated grid error within ~1e-10
        // even for arguments around 1e9 / step panels.
        nodes_.push_back(nodes_.back() + integrate_adaptive(f, a, a + step_, 1e-15, 64).value);
    }
    const double base = step_ * static_cast<double>(idx);
    return nodes_[idx] + gauss7(f, base, r);
}

}  // namespace flocknet
