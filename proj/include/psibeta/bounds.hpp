#pragma once

// Exact L2 approximation constants of the class L^psi_{beta,1} for linear
// summation methods. All results are independent of beta.

#include "psibeta/methods.hpp"
#include "psibeta/sequences.hpp"

#include <cstddef>
#include <optional>
#include <utility>

namespace psibeta {

/// (1/sqrt(pi)) (sum_k ((1 - lambda_k(delta))^2 + mu_k(delta)^2) psi^2(k))^{1/2}.
/// Needs a cutoff beyond which lambda = mu = 0: the scheme's k_support or,
/// failing that, `certified_cutoff` from the caller. Throws TailUnbounded
/// when neither is available.
double error_scheme(const PsiSequence& psi, const MultiplierScheme& scheme, double delta, double tol,
                    std::optional<std::size_t> certified_cutoff = std::nullopt);

double error_triangular(const PsiSequence& psi, const TriangularMethod& method, double tol);

/// Fourier partial sums S_n.
double error_fourier(const PsiSequence& psi, std::size_t n, double tol);

/// q^{n+1} / sqrt(pi (1 - q^2)).
double error_fourier_geometric(double q, std::size_t n);

/// Vallee Poussin sums V_{n,m}, summed from the taper weights directly.
double error_vdp(const PsiSequence& psi, std::size_t n, long long m, double tol);

struct IdentitySides {
    double lhs;
    double rhs;
};

/// Both sides of the geometric taper-sum identity: the weighted head plus
/// the geometric tail, and its closed form.
IdentitySides vdp_geometric_lhs_rhs(double q, std::size_t n, long long m);

/// Closed form of error_vdp for psi(k) = q^k, evaluated from its factorised
/// expression rather than from the taper sum.
double error_vdp_geometric(double q, std::size_t n, long long m);

} // namespace psibeta
