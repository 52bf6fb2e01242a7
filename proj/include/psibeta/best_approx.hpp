#pragma once

// Best approximation of the generating kernel by trigonometric polynomials,
// the best linear approximation of the class it determines, and the
// correspondence between methods U_n(Lambda; M) and zero-mean polynomials.

#include "psibeta/error.hpp"
#include "psibeta/kernels.hpp"
#include "psibeta/methods.hpp"
#include "psibeta/trig_polynomial.hpp"

#include <cstddef>
#include <string_view>

namespace psibeta {

enum class NormExponent { One, Two, Infinity };

std::string_view to_string(NormExponent p) noexcept;

struct BestApproxOptions {
    NormExponent p = NormExponent::Two;
    std::size_t grid_size = 4096; ///< power of two, >= 8(n+1); used for p != 2
    std::size_t max_iter = 100'000;
    double conv_tol = 1e-12;
};

struct BestApproximation {
    TrigPolynomial poly;    ///< T_n plus the free constant
    double error = 0.0;     ///< E_n(Psi_beta)_{L_p}
    /// Exact at p = 2 (zero). For p = inf it rigorously bounds the distance
    /// to the discrete best approximation on the doubled grid; for p = 1 it
    /// is the LP duality gap plus the residual's change under grid doubling.
    /// Both include the kernel truncation.
    double certificate = 0.0;
    std::size_t iterations = 0;
};

class NoConvergenceError : public Error {
  public:
    NoConvergenceError(const std::string& what, BestApproximation best)
        : Error(ErrorKind::NoConvergence, what), best_(std::move(best)) {}
    const BestApproximation& best() const noexcept { return best_; }

  private:
    BestApproximation best_;
};

/// E_n(Psi_beta)_{L_p} and a minimiser, over degree-n polynomials plus a
/// constant. p = 2 is exact (the Fourier truncation); p = inf runs a discrete
/// Remez exchange on the grid; p = 1 solves the discrete least-absolute-
/// deviation problem as a linear program.
BestApproximation best_trig_poly(const KernelSpec& spec, std::size_t n, const BestApproxOptions& opts);

/// (1/pi) E_n(Psi_beta)_{L_p}. Requires psi(k) != 0 on the modelled range.
double best_linear_error(const KernelSpec& spec, std::size_t n, const BestApproxOptions& opts);

/// The optimal method: method_from_poly applied to the non-constant part of
/// the best approximating polynomial.
TriangularMethod best_linear_method(const KernelSpec& spec, std::size_t n, const BestApproxOptions& opts);

/// lambda_k = (alpha_k cos theta_k + gamma_k sin theta_k) / psi(k),
/// mu_k = (gamma_k cos theta_k - alpha_k sin theta_k) / psi(k).
TriangularMethod method_from_poly(const TrigPolynomial& poly, const KernelSpec& spec, std::size_t n);

/// alpha_k = psi(k)(lambda_k cos theta_k - mu_k sin theta_k),
/// gamma_k = psi(k)(lambda_k sin theta_k + mu_k cos theta_k).
TrigPolynomial poly_from_method(const TriangularMethod& method, const KernelSpec& spec);

} // namespace psibeta
