#include <cmath>

#include "flocknet/errors.hpp"
#include "flocknet/simd/edge_kernels.hpp"

namespace flocknet::kern {

void edge_force_scalar(const Csr& adj, std::span<const double> pos,
                       std::span<const double> y, int n, int dim,
                       const WeightSpec& w, double gain, std::span<double> out) {
    for (int i = 0; i < n; ++i) {
        for (std::int32_t e = adj.offsets[i]; e < adj.offsets[i + 1]; ++e) {
            const int j = adj.neighbors[e];
            double weight;
            if (w.form == KernelForm::constant) {
                weight = w.c;
            } else {
                double sq = 0.0;
                for (int k = 0; k < dim; ++k) {
                    const double d = pos[k * n + j] - pos[k * n + i];
                    sq += d * d;
                }
                const double arg = w.squared_arg ? sq : std::sqrt(sq);
                weight = weight_value(w, arg);
            }
            const double gw = gain * weight;
            for (int k = 0; k < dim; ++k)
                out[k * n + i] += gw * (y[k * n + j] - y[k * n + i]);
        }
    }
}

void pairwise_sqdist_scalar(std::span<const double> pos, int n, int dim,
                            std::span<double> out) {
    std::size_t p = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++p) {
            double sq = 0.0;
            for (int k = 0; k < dim; ++k) {
                const double d = pos[k * n + j] - pos[k * n + i];
                sq += d * d;
            }
            out[p] = sq;
        }
    }
}

void edge_force(Backend be, const Csr& adj, std::span<const double> pos,
                std::span<const double> y, int n, int dim,
                const WeightSpec& w, double gain, std::span<double> out) {
    if (gain == 0.0) return;
    if (be == Backend::avx2 && !backend_available(Backend::avx2))
        throw Error("avx2 backend selected but unavailable at runtime");
#if defined(__x86_64__) || defined(_M_X64)
    if (be == Backend::avx2) {
        edge_force_avx2(adj, pos, y, n, dim, w, gain, out);
        return;
    }
#endif
    edge_force_scalar(adj, pos, y, n, dim, w, gain, out);
}

void pairwise_sqdist(Backend be, std::span<const double> pos, int n, int dim,
                     std::span<double> out) {
    if (be == Backend::avx2 && !backend_available(Backend::avx2))
        throw Error("avx2 backend selected but unavailable at runtime");
#if defined(__x86_64__) || defined(_M_X64)
    if (be == Backend::avx2) {
        pairwise_sqdist_avx2(pos, n, dim, out);
        return;
    }
#endif
    pairwise_sqdist_scalar(pos, n, dim, out);
}

}  // namespace flocknet::kern
