#pragma once

// Generating kernel Psi_beta(t) = sum_{k>=1} psi(k) cos(kt - beta_k pi/2) in
// coefficient space.

#include "psibeta/methods.hpp"
#include "psibeta/sequences.hpp"
#include "psibeta/trig_polynomial.hpp"

#include <cstddef>
#include <vector>

namespace psibeta {

struct KernelSpec {
    PsiSequence psi;
    BetaSequence beta;
};

/// Degree-K truncation: a_k = psi(k) cos(beta_k pi/2), b_k = psi(k) sin(beta_k pi/2).
TrigPolynomial kernel_partial_sum(const KernelSpec& spec, std::size_t K);

/// Pointwise value within tol, truncating where sum_{k>K} |psi(k)| <= tol.
/// Throws TailNotSummable for a power law with r <= 1.
double kernel_eval(const KernelSpec& spec, double t, double tol);

/// Degree-K polynomial whose k-th harmonic is
/// psi(k) [(1 - lambda_k) cos(kt - theta_k) + mu_k sin(kt - theta_k)].
/// Throws InvalidRange when K < method.n.
TrigPolynomial difference_kernel(const KernelSpec& spec, const TriangularMethod& method, std::size_t K);

/// Samples at t_j = -pi + 2 pi j / N of the degree-K truncation. Harmonics
/// above N/2 are folded onto their grid aliases first, so K may be large.
std::vector<double> kernel_grid_samples(const KernelSpec& spec, std::size_t N, std::size_t K);

/// Truncation degree for norm computations: tail l2-sum < tol^2 * pi.
std::size_t kernel_norm_truncation(const KernelSpec& spec, double tol, std::size_t cap = 1'000'000);

/// Truncation degree for pointwise evaluation: l1 tail <= tol.
std::size_t kernel_pointwise_truncation(const KernelSpec& spec, double tol, std::size_t cap = 1'000'000);

} // namespace psibeta
