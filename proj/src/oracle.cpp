#include "psibeta/oracle.hpp"

#include "psibeta/compensated_sum.hpp"
#include "psibeta/error.hpp"
#include "psibeta/operators.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <string>

namespace psibeta {

GridFunction::GridFunction(std::vector<double> samples) : samples_(std::move(samples)) {
    if (samples_.size() < 2 || samples_.size() % 2 != 0)
        throw Error(ErrorKind::InvalidRange, "grid size must be even and at least 2, got " + std::to_string(samples_.size()));
}

double lp_norm_grid(const GridFunction& g, NormExponent p) {
    const double h = 2.0 * std::numbers::pi / static_cast<double>(g.size());
    switch (p) {
    case NormExponent::Infinity: {
        double m = 0.0;
        for (double x : g.samples())
            m = std::max(m, std::abs(x));
        return m;
    }
    case NormExponent::One: {
        CompensatedSum acc;
        for (double x : g.samples())
            acc += std::abs(x);
        return h * acc.value();
    }
    case NormExponent::Two: {
        CompensatedSum acc;
        for (double x : g.samples())
            acc += x * x;
        return std::sqrt(h * acc.value());
    }
    }
    return 0.0;
}

std::size_t oracle_truncation(const PsiSequence& psi) { return l2_truncation(psi, std::numbers::pi * 1e-26, 1'000'000); }

double kernel_difference_norm_quadrature(const KernelSpec& spec, const TriangularMethod& method, std::size_t N,
                                         std::size_t K) {
    if (K < method.n || N <= 2 * K)
        throw Error(ErrorKind::InvalidRange, "quadrature needs N > 2K and K >= n");
    const TrigPolynomial D = difference_kernel(spec, method, K);
    const double grid = lp_norm_grid(GridFunction::from(D, N), NormExponent::Two) / std::numbers::pi;
    const double tail = psi_tail_sq_sum(spec.psi, K, 1e-30 + 1e-17 * psi_tail_sq_upper(spec.psi, K)) / std::numbers::pi;
    return std::sqrt(grid * grid + tail);
}

std::vector<double> fejer_lower_bounds(const KernelSpec& spec, const TriangularMethod& method,
                                       std::span<const std::size_t> orders, double a0) {
    std::vector<double> out;
    out.reserve(orders.size());
    for (const std::size_t order : orders) {
        if (order == 0)
            throw Error(ErrorKind::InvalidRange, "Fejer order must be positive");
        // F_N(t) / (2 pi) = 1/(2 pi) + (1/pi) sum_k (1 - k/(N+1)) cos kt; keep the zero-mean part.
        TrigPolynomial phi = TrigPolynomial::zero(order);
        for (std::size_t k = 1; k <= order; ++k)
            phi.set_harmonic(k, (1.0 - static_cast<double>(k) / static_cast<double>(order + 1)) / std::numbers::pi, 0.0);
        const TrigPolynomial f = synthesize_class_function(phi, spec, a0);
        const TrigPolynomial diff = f - apply_triangular(f, method);
        std::size_t N = 8;
        while (N <= 2 * diff.degree())
            N *= 2;
        out.push_back(lp_norm_grid(GridFunction::from(diff, N), NormExponent::Two));
    }
    return out;
}

double ls_best_l2_on_grid(const KernelSpec& spec, std::size_t n, std::size_t N, std::size_t K) {
    if (K < n || N <= 2 * K || K == 0)
        throw Error(ErrorKind::InvalidRange, "least-squares oracle needs N > 2K >= 2n and K >= 1");
    const auto samples = kernel_partial_sum(spec, K).sample(N);
    const auto t = periodic_grid(N);
    const auto rows = static_cast<Eigen::Index>(N);
    Eigen::MatrixXd Phi(rows, static_cast<Eigen::Index>(2 * n + 1));
    for (Eigen::Index j = 0; j < rows; ++j) {
        Phi(j, 0) = 1.0;
        for (std::size_t k = 1; k <= n; ++k) {
            const double kt = static_cast<double>(k) * t[static_cast<std::size_t>(j)];
            Phi(j, static_cast<Eigen::Index>(2 * k - 1)) = std::cos(kt);
            Phi(j, static_cast<Eigen::Index>(2 * k)) = std::sin(kt);
        }
    }
    const Eigen::Map<const Eigen::VectorXd> y(samples.data(), rows);
    const Eigen::VectorXd coeffs = Phi.colPivHouseholderQr().solve(y);
    const Eigen::VectorXd r = y - Phi * coeffs;
    return lp_norm_grid(GridFunction(std::vector<double>(r.data(), r.data() + r.size())), NormExponent::Two);
}

} // namespace psibeta
