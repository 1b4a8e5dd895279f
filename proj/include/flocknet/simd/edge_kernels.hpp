#pragma once

#include <cstdint>
#include <span>

#include "flocknet/comm_kernel.hpp"
#include "flocknet/graph.hpp"
#include "flocknet/simd/backend.hpp"

namespace flocknet::kern {

// Arrays are component-major: component k of agent i lives at [k * n + i].
//
// edge_force accumulates, for every vertex i,
//     out[i] += gain * sum over neighbors j of  w(arg_ij) * (y_j - y_i)
// where arg_ij is the pairwise distance of `pos` rows (squared when the
// weight spec says so) and w is the communication weight. The alignment
// force, the control force, and the noise coefficient are all instances:
// alignment uses pos = x, y = v; control uses pos = y = x - z; the noise
// coefficient uses a constant weight of 1 with y = v.
//
// The scalar variant is the reference; the AVX2 variant vectorizes the
// dim == 2 layout (distances, weight chains for the common exponents, and
// the accumulation) and produces the same sums up to reassociation.
void edge_force(Backend be, const Csr& adj, std::span<const double> pos,
                std::span<const double> y, int n, int dim,
                const WeightSpec& w, double gain, std::span<double> out);

// Squared pairwise distances of the rows of `pos` for all i < j, written to
// out in row-major upper-triangle order: index(i, j) = i*n - i*(i+1)/2 + j - i - 1.
void pairwise_sqdist(Backend be, std::span<const double> pos, int n, int dim,
                     std::span<double> out);

inline std::size_t pair_count(int n) {
    return static_cast<std::size_t>(n) * (n - 1) / 2;
}
inline std::size_t pair_index(int i, int j, int n) {
    return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i + 1) / 2 + j - i - 1;
}

// Scalar reference implementations (tested against the dispatched variants).
void edge_force_scalar(const Csr& adj, std::span<const double> pos,
                       std::span<const double> y, int n, int dim,
                       const WeightSpec& w, double gain, std::span<double> out);
void pairwise_sqdist_scalar(std::span<const double> pos, int n, int dim,
                            std::span<double> out);

#if defined(__x86_64__) || defined(_M_X64)
void edge_force_avx2(const Csr& adj, std::span<const double> pos,
                     std::span<const double> y, int n, int dim,
                     const WeightSpec& w, double gain, std::span<double> out);
void pairwise_sqdist_avx2(std::span<const double> pos, int n, int dim,
                          std::span<double> out);
#endif

}  // namespace flocknet::kern
