#include "psibeta/kernels.hpp"

#include "psibeta/compensated_sum.hpp"
#include "psibeta/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace psibeta {

TrigPolynomial kernel_partial_sum(const KernelSpec& spec, std::size_t K) {
    if (K == 0)
        throw Error(ErrorKind::InvalidRange, "kernel truncation degree must be positive");
    std::vector<double> a(K), b(K);
    for (std::size_t k = 1; k <= K; ++k) {
        const double amp = spec.psi(k);
        const auto [c, s] = quarter_turn(spec.beta(k));
        a[k - 1] = amp * c;
        b[k - 1] = amp * s;
    }
    return TrigPolynomial(0.0, std::move(a), std::move(b));
}

std::size_t kernel_norm_truncation(const KernelSpec& spec, double tol, std::size_t cap) {
    return l2_truncation(spec.psi, tol * tol * std::numbers::pi, cap);
}

std::size_t kernel_pointwise_truncation(const KernelSpec& spec, double tol, std::size_t cap) {
    return l1_truncation(spec.psi, tol, cap);
}

double kernel_eval(const KernelSpec& spec, double t, double tol) {
    if (!(tol > 0.0))
        throw Error(ErrorKind::DomainError, "tolerance must be positive");
    // The truncation bound leaves half the budget for rounding.
    const std::size_t K = kernel_pointwise_truncation(spec, 0.5 * tol);
    if (psi_tail_abs_upper(spec.psi, K) > 0.5 * tol)
        throw Error(ErrorKind::TailNotSummable, "l1 tail does not reach tolerance within the truncation cap");
    // Reduce t to [-pi, pi) so that large arguments keep their accuracy.
    const double two_pi = 2.0 * std::numbers::pi;
    double x = std::fmod(t + std::numbers::pi, two_pi);
    if (x < 0.0)
        x += two_pi;
    x -= std::numbers::pi;
    CompensatedSum acc;
    for (std::size_t k = 1; k <= K; ++k) {
        const auto [c, s] = quarter_turn(spec.beta(k));
        const double kx = static_cast<double>(k) * x;
        acc += spec.psi(k) * (std::cos(kx) * c + std::sin(kx) * s);
    }
    return acc.value();
}

std::vector<double> kernel_grid_samples(const KernelSpec& spec, std::size_t N, std::size_t K) {
    if (N < 2 || N % 2 != 0)
        throw Error(ErrorKind::InvalidRange, "grid size must be even and at least 2");
    const std::size_t half = N / 2;
    // On the grid, k t_j = -k pi + 2 pi (k mod N) j / N.
    std::vector<CompensatedSum> cos_bins(half + 1), sin_bins(half + 1);
    for (std::size_t k = 1; k <= K; ++k) {
        const double amp = spec.psi(k);
        if (amp == 0.0)
            continue;
        const auto [c, s] = quarter_turn(spec.beta(k));
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        std::size_t r = k % N;
        double sin_sign = 1.0;
        if (r > half) {
            r = N - r;
            sin_sign = -1.0;
        }
        cos_bins[r] += sign * amp * c;
        if (r != 0 && r != half)
            sin_bins[r] += sign * sin_sign * amp * s;
    }
    std::vector<double> cos_table(N), sin_table(N);
    for (std::size_t i = 0; i < N; ++i) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(N);
        cos_table[i] = std::cos(angle);
        sin_table[i] = std::sin(angle);
    }
    std::vector<double> A(half + 1), B(half + 1);
    for (std::size_t r = 0; r <= half; ++r) {
        A[r] = cos_bins[r].value();
        B[r] = sin_bins[r].value();
    }
    std::vector<double> out(N);
    for (std::size_t j = 0; j < N; ++j) {
        CompensatedSum acc;
        for (std::size_t r = 0; r <= half; ++r) {
            if (A[r] == 0.0 && B[r] == 0.0)
                continue;
            const std::size_t idx = r * j % N;
            acc += A[r] * cos_table[idx] + B[r] * sin_table[idx];
        }
        out[j] = acc.value();
    }
    return out;
}

TrigPolynomial difference_kernel(const KernelSpec& spec, const TriangularMethod& method, std::size_t K) {
    require_valid(method);
    if (K < method.n)
        throw Error(ErrorKind::InvalidRange,
                    "difference kernel degree K=" + std::to_string(K) + " is below method order n=" + std::to_string(method.n));
    std::vector<double> a(K), b(K);
    for (std::size_t k = 1; k <= K; ++k) {
        const double amp = spec.psi(k);
        const double keep = 1.0 - method.lambda_at(k);
        const double rot = method.mu_at(k);
        const auto [c, s] = quarter_turn(spec.beta(k));
        // cos(kt - theta) = cos kt cos theta + sin kt sin theta
        // sin(kt - theta) = sin kt cos theta - cos kt sin theta
        a[k - 1] = amp * (keep * c - rot * s);
        b[k - 1] = amp * (keep * s + rot * c);
    }
    return TrigPolynomial(0.0, std::move(a), std::move(b));
}

} // namespace psibeta
