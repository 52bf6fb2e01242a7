#include "psibeta/bounds.hpp"

#include "psibeta/compensated_sum.hpp"
#include "psibeta/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace psibeta {

namespace {

void check_q(double q) {
    if (!std::isfinite(q) || q <= 0.0 || q >= 1.0)
        throw Error(ErrorKind::DomainError, "q must lie in (0,1), got " + std::to_string(q));
}

std::size_t check_band(std::size_t n, long long m) {
    if (m < 0 || static_cast<unsigned long long>(m) > n)
        throw Error(ErrorKind::InvalidRange,
                    "Vallee Poussin band requires 0 <= m <= n, got n=" + std::to_string(n) + " m=" + std::to_string(m));
    return static_cast<std::size_t>(m);
}

// Combines an exactly summed head with the tail beyond `cutoff`. The tail
// tolerance is chosen so that the final square root stays within tol.
double finish(const PsiSequence& psi, double head, std::size_t cutoff, double tol) {
    if (!(tol > 0.0))
        throw Error(ErrorKind::DomainError, "tolerance must be positive");
    const double first = psi(cutoff + 1);
    const double floor_sq = head + first * first;
    const double tail_tol = std::max(0.5 * std::max(std::numbers::pi * tol * tol, tol * std::sqrt(std::numbers::pi * floor_sq)),
                                     std::numeric_limits<double>::min());
    const double tail = psi_tail_sq_sum(psi, cutoff, tail_tol);
    return std::sqrt((head + tail) / std::numbers::pi);
}

} // namespace

double error_scheme(const PsiSequence& psi, const MultiplierScheme& scheme, double delta, double tol,
                    std::optional<std::size_t> certified_cutoff) {
    scheme.check(delta);
    const auto cutoff = scheme.k_support ? scheme.k_support : certified_cutoff;
    if (!cutoff)
        throw Error(ErrorKind::TailUnbounded, "scheme has infinite support and no certified cutoff was supplied");
    CompensatedSum head;
    for (std::size_t k = 1; k <= *cutoff; ++k) {
        const double keep = 1.0 - scheme.lambda_at(delta, k);
        const double rot = scheme.mu_at(delta, k);
        const double amp = psi(k);
        head += (keep * keep + rot * rot) * amp * amp;
    }
    return finish(psi, head.value(), *cutoff, tol);
}

double error_triangular(const PsiSequence& psi, const TriangularMethod& method, double tol) {
    require_valid(method);
    CompensatedSum head;
    for (std::size_t k = 1; k <= method.n; ++k) {
        const double keep = 1.0 - method.lambda[k];
        const double rot = method.mu[k];
        const double amp = psi(k);
        head += (keep * keep + rot * rot) * amp * amp;
    }
    return finish(psi, head.value(), method.n, tol);
}

double error_fourier(const PsiSequence& psi, std::size_t n, double tol) { return finish(psi, 0.0, n, tol); }

double error_fourier_geometric(double q, std::size_t n) {
    check_q(q);
    return std::pow(q, static_cast<double>(n + 1)) / std::sqrt(std::numbers::pi * (1.0 - q * q));
}

double error_vdp(const PsiSequence& psi, std::size_t n, long long m, double tol) {
    const std::size_t band = check_band(n, m);
    CompensatedSum head;
    for (std::size_t k = n - band + 1; k <= n; ++k) {
        const double weight = static_cast<double>(k + band - n);
        const double amp = psi(k);
        head += weight * weight * amp * amp;
    }
    const double scale = static_cast<double>(band + 1);
    return finish(psi, head.value() / (scale * scale), n, tol);
}

IdentitySides vdp_geometric_lhs_rhs(double q, std::size_t n, long long m) {
    check_q(q);
    const std::size_t band = check_band(n, m);
    const double q2 = q * q;
    const double scale = static_cast<double>(band + 1);

    CompensatedSum lhs;
    for (std::size_t k = n - band + 1; k <= n; ++k) {
        const double weight = static_cast<double>(k + band - n);
        lhs += weight * weight * std::pow(q, 2.0 * static_cast<double>(k)) / (scale * scale);
    }
    lhs += std::pow(q, 2.0 * static_cast<double>(n + 1)) / (1.0 - q2);

    const double two_m = 2.0 * static_cast<double>(band);
    const double bracket = 1.0 + q2 - std::pow(q, two_m + 2.0) * (two_m + 3.0 - q2 * (two_m + 1.0));
    const double one_minus = 1.0 - q2;
    const double rhs = std::pow(q, 2.0 * static_cast<double>(n - band + 1)) * bracket /
                       (scale * scale * one_minus * one_minus * one_minus);
    return {lhs.value(), rhs};
}

double error_vdp_geometric(double q, std::size_t n, long long m) {
    check_q(q);
    const std::size_t band = check_band(n, m);
    const double q2 = q * q;
    const double two_m = 2.0 * static_cast<double>(band);
    const double bracket = 1.0 + q2 - std::pow(q, two_m + 2.0) * (two_m + 3.0 - q2 * (two_m + 1.0));
    const double one_minus = 1.0 - q2;
    return std::pow(q, static_cast<double>(n - band + 1)) / (std::sqrt(std::numbers::pi) * static_cast<double>(band + 1)) *
           std::sqrt(bracket / (one_minus * one_minus * one_minus));
}

} // namespace psibeta
