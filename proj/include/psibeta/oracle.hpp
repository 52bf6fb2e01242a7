#pragma once

// Quadrature-based checks of the closed-form constants. Everything here works
// on sampled functions and never reuses the multiplier formulas directly.

#include "psibeta/best_approx.hpp"
#include "psibeta/kernels.hpp"
#include "psibeta/methods.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace psibeta {

/// Samples at t_j = -pi + 2 pi j / N; N even and >= 2.
class GridFunction {
  public:
    explicit GridFunction(std::vector<double> samples);
    static GridFunction from(const TrigPolynomial& p, std::size_t N) { return GridFunction(p.sample(N)); }

    std::size_t size() const noexcept { return samples_.size(); }
    std::span<const double> samples() const noexcept { return samples_; }

  private:
    std::vector<double> samples_;
};

/// Rectangle rule; exact at p = 2 for trigonometric polynomials of degree < N/2.
double lp_norm_grid(const GridFunction& g, NormExponent p);

/// Smallest K with sum_{k>K} psi^2(k) < pi * 1e-26, capped at 1e6.
std::size_t oracle_truncation(const PsiSequence& psi);

/// (1/pi) ||difference_kernel||_{L2, grid} combined in quadrature with the
/// certified tail sqrt(sum_{k>K} psi^2(k) / pi). Requires N > 2K, K >= n.
double kernel_difference_norm_quadrature(const KernelSpec& spec, const TriangularMethod& method, std::size_t N,
                                         std::size_t K);

/// ||f_N - U(f_N)||_{L2} for f_N synthesised from the zero-mean part of the
/// normalised Fejer kernel of each order N. Nondecreasing in N and bounded by
/// error_triangular.
std::vector<double> fejer_lower_bounds(const KernelSpec& spec, const TriangularMethod& method,
                                       std::span<const std::size_t> orders, double a0);

/// Residual L2 grid norm of the discrete least-squares fit of the degree-K
/// kernel samples by degree-n polynomials with a free constant. Requires
/// N > 2K >= 2n.
double ls_best_l2_on_grid(const KernelSpec& spec, std::size_t n, std::size_t N, std::size_t K);

} // namespace psibeta
