#include "psibeta/best_approx.hpp"

#include "psibeta/compensated_sum.hpp"
#include "psibeta/linear_program.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <variant>

namespace psibeta {

namespace {

constexpr std::size_t truncation_cap = std::size_t{1} << 20;

// Basis ordering: 1, cos t, sin t, cos 2t, sin 2t, ...
Eigen::MatrixXd basis_matrix(std::size_t N, std::size_t n) {
    const auto t = periodic_grid(N);
    Eigen::MatrixXd Phi(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(2 * n + 1));
    for (std::size_t j = 0; j < N; ++j) {
        const auto row = static_cast<Eigen::Index>(j);
        Phi(row, 0) = 1.0;
        for (std::size_t k = 1; k <= n; ++k) {
            const double kt = static_cast<double>(k) * t[j];
            Phi(row, static_cast<Eigen::Index>(2 * k - 1)) = std::cos(kt);
            Phi(row, static_cast<Eigen::Index>(2 * k)) = std::sin(kt);
        }
    }
    return Phi;
}

TrigPolynomial from_basis(const Eigen::VectorXd& coeffs, std::size_t n) {
    TrigPolynomial T = TrigPolynomial::zero(n);
    T.set_a0(2.0 * coeffs[0]);
    for (std::size_t k = 1; k <= n; ++k)
        T.set_harmonic(k, coeffs[static_cast<Eigen::Index>(2 * k - 1)], coeffs[static_cast<Eigen::Index>(2 * k)]);
    return T;
}

std::vector<double> residual(const std::vector<double>& g, const TrigPolynomial& T) {
    auto r = T.sample(g.size());
    for (std::size_t j = 0; j < g.size(); ++j)
        r[j] = g[j] - r[j];
    return r;
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v)
        m = std::max(m, std::abs(x));
    return m;
}

double grid_l1(const std::vector<double>& v) {
    CompensatedSum acc;
    for (double x : v)
        acc += std::abs(x);
    return 2.0 * std::numbers::pi / static_cast<double>(v.size()) * acc.value();
}

struct Sampling {
    std::size_t K;
    double l1_tail;
};

Sampling grid_sampling(const KernelSpec& spec) {
    try {
        const std::size_t K = std::max<std::size_t>(1, l1_truncation(spec.psi, 1e-16, truncation_cap));
        return {K, psi_tail_abs_upper(spec.psi, K)};
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::TailNotSummable)
            throw Error(ErrorKind::NotInLp, "kernel samples cannot be certified: " + std::string(e.what()));
        throw;
    }
}

void check_grid(std::size_t n, const BestApproxOptions& opts) {
    const std::size_t N = opts.grid_size;
    if (N < 8 * (n + 1) || (N & (N - 1)) != 0)
        throw Error(ErrorKind::InvalidRange, "grid size must be a power of two >= 8(n+1) = " + std::to_string(8 * (n + 1)));
    if (!(opts.conv_tol > 0.0) || opts.max_iter == 0)
        throw Error(ErrorKind::InvalidRange, "conv_tol must be positive and max_iter nonzero");
}

// Discrete Remez: levelled error on 2n+2 reference points, single-point
// (Stiefel) exchange. The reference count is even, so sign alternation is
// consistent around the circle.
BestApproximation remez(const std::vector<double>& g, std::size_t n, const BestApproxOptions& opts) {
    const std::size_t N = g.size();
    const std::size_t dim = 2 * n + 1;
    const std::size_t refs = dim + 1;
    const auto t = periodic_grid(N);

    std::vector<std::size_t> ref(refs);
    for (std::size_t i = 0; i < refs; ++i)
        ref[i] = i * N / refs;

    BestApproximation best;
    best.error = std::numeric_limits<double>::infinity();
    for (std::size_t iter = 1; iter <= opts.max_iter; ++iter) {
        Eigen::MatrixXd M(static_cast<Eigen::Index>(refs), static_cast<Eigen::Index>(refs));
        Eigen::VectorXd rhs(static_cast<Eigen::Index>(refs));
        for (std::size_t i = 0; i < refs; ++i) {
            const auto row = static_cast<Eigen::Index>(i);
            const double x = t[ref[i]];
            M(row, 0) = 1.0;
            for (std::size_t k = 1; k <= n; ++k) {
                M(row, static_cast<Eigen::Index>(2 * k - 1)) = std::cos(static_cast<double>(k) * x);
                M(row, static_cast<Eigen::Index>(2 * k)) = std::sin(static_cast<double>(k) * x);
            }
            M(row, static_cast<Eigen::Index>(dim)) = (i % 2 == 0) ? 1.0 : -1.0;
            rhs[row] = g[ref[i]];
        }
        const Eigen::VectorXd sol = M.fullPivLu().solve(rhs);
        const double level = std::abs(sol[static_cast<Eigen::Index>(dim)]);
        TrigPolynomial T = from_basis(sol.head(static_cast<Eigen::Index>(dim)), n);
        const auto e = residual(g, T);

        std::size_t jmax = 0;
        for (std::size_t j = 1; j < N; ++j)
            if (std::abs(e[j]) > std::abs(e[jmax]))
                jmax = j;
        const double peak = std::abs(e[jmax]);
        if (peak < best.error) {
            best.poly = T;
            best.error = peak;
            best.certificate = peak - level;
        }
        best.iterations = iter;

        const bool in_ref = std::find(ref.begin(), ref.end(), jmax) != ref.end();
        if (peak - level <= opts.conv_tol * std::max(1.0, level) || in_ref)
            return best;

        // Neighbours of jmax in the cyclic reference order.
        const auto above = std::upper_bound(ref.begin(), ref.end(), jmax);
        const std::size_t next = (above == ref.end()) ? 0 : static_cast<std::size_t>(above - ref.begin());
        const std::size_t prev = (next == 0) ? refs - 1 : next - 1;
        const bool same_as_prev = std::signbit(e[ref[prev]]) == std::signbit(e[jmax]);
        ref[same_as_prev ? prev : next] = jmax;
        std::sort(ref.begin(), ref.end());
    }
    throw NoConvergenceError("Remez exchange did not converge in " + std::to_string(opts.max_iter) + " iterations",
                             best);
}

// Least absolute deviations through the dual LP
//   max g'u  s.t.  Phi'u = 0,  |u_j| <= w,
// shifted to 0 <= v <= 2w. The simplex multipliers are the fit coefficients.
BestApproximation lad(const std::vector<double>& g, std::size_t n, const BestApproxOptions& opts) {
    const std::size_t N = g.size();
    const double w = 2.0 * std::numbers::pi / static_cast<double>(N);
    const Eigen::MatrixXd Phi = basis_matrix(N, n);
    const Eigen::Map<const Eigen::VectorXd> gv(g.data(), static_cast<Eigen::Index>(N));

    BoundedLp lp;
    lp.A = Phi.transpose();
    lp.b = lp.A * Eigen::VectorXd::Constant(static_cast<Eigen::Index>(N), w);
    lp.c = gv;
    lp.lower = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(N));
    lp.upper = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(N), 2.0 * w);

    // Start from the sign pattern of the least-squares residual.
    const Eigen::VectorXd ls = Phi.colPivHouseholderQr().solve(gv);
    const Eigen::VectorXd ls_res = gv - Phi * ls;
    LpOptions lp_opts;
    lp_opts.max_iterations = opts.max_iter;
    lp_opts.start_at_upper.resize(N);
    for (std::size_t j = 0; j < N; ++j)
        lp_opts.start_at_upper[j] = ls_res[static_cast<Eigen::Index>(j)] > 0.0;

    const LpSolution sol = solve_bounded_lp(lp, lp_opts);
    BestApproximation out;
    out.iterations = sol.iterations;
    if (sol.status != LpStatus::Optimal) {
        out.poly = from_basis(sol.status == LpStatus::IterationLimit && sol.duals.size() ? sol.duals : ls, n);
        out.error = grid_l1(residual(g, out.poly));
        throw NoConvergenceError("least-absolute-deviation LP did not reach optimality", out);
    }
    out.poly = from_basis(sol.duals, n);
    out.error = grid_l1(residual(g, out.poly));
    const double dual_value = sol.objective - w * gv.sum();
    out.certificate = std::max(0.0, out.error - dual_value);
    return out;
}

void check_psi_nonzero(const PsiSequence& psi, std::size_t n) {
    const std::size_t range = std::max(n, psi.stored_length());
    for (std::size_t k = 1; k <= range; ++k)
        if (psi(k) == 0.0)
            throw Error(ErrorKind::ZeroPsi, "psi(" + std::to_string(k) + ") = 0", k);
    if (const auto* e = std::get_if<ExplicitPsi>(&psi.parameters()))
        if (const auto* tail = std::get_if<GeometricTail>(&e->tail); tail && tail->scale == 0.0)
            throw Error(ErrorKind::ZeroPsi, "geometric tail with zero scale", e->values.size() + 1);
}

} // namespace

std::string_view to_string(NormExponent p) noexcept {
    switch (p) {
    case NormExponent::One: return "1";
    case NormExponent::Two: return "2";
    case NormExponent::Infinity: return "inf";
    }
    return "?";
}

BestApproximation best_trig_poly(const KernelSpec& spec, std::size_t n, const BestApproxOptions& opts) {
    if (opts.p == NormExponent::Two) {
        BestApproximation out;
        out.poly = n == 0 ? TrigPolynomial{} : kernel_partial_sum(spec, n);
        const double tol = opts.conv_tol;
        const double first = spec.psi(n + 1);
        const double tail_tol = 0.5 * std::max(tol * tol / std::numbers::pi, tol * std::abs(first) / std::sqrt(std::numbers::pi));
        out.error = std::sqrt(std::numbers::pi * psi_tail_sq_sum(spec.psi, n, tail_tol));
        return out;
    }

    check_grid(n, opts);
    const auto [K, l1_tail] = grid_sampling(spec);
    const std::size_t N = opts.grid_size;
    const auto g = kernel_grid_samples(spec, N, K);
    const auto g_fine = kernel_grid_samples(spec, 2 * N, K);

    if (opts.p == NormExponent::Infinity) {
        BestApproximation out = remez(g, n, opts);
        const double level = out.error - out.certificate;
        out.certificate = max_abs(residual(g_fine, out.poly)) - level + 2.0 * l1_tail;
        return out;
    }

    BestApproximation out = lad(g, n, opts);
    const double refined = grid_l1(residual(g_fine, out.poly));
    out.certificate += std::abs(refined - out.error) + 4.0 * std::numbers::pi * l1_tail;
    return out;
}

double best_linear_error(const KernelSpec& spec, std::size_t n, const BestApproxOptions& opts) {
    check_psi_nonzero(spec.psi, n);
    return best_trig_poly(spec, n, opts).error / std::numbers::pi;
}

TriangularMethod best_linear_method(const KernelSpec& spec, std::size_t n, const BestApproxOptions& opts) {
    check_psi_nonzero(spec.psi, n);
    TrigPolynomial T = best_trig_poly(spec, n, opts).poly.resized(n);
    T.set_a0(0.0);
    return method_from_poly(T, spec, n);
}

TriangularMethod method_from_poly(const TrigPolynomial& poly, const KernelSpec& spec, std::size_t n) {
    if (poly.degree() > n)
        throw Error(ErrorKind::InvalidRange,
                    "polynomial degree " + std::to_string(poly.degree()) + " exceeds method order " + std::to_string(n));
    if (poly.a0() != 0.0)
        throw Error(ErrorKind::NotZeroMean, "polynomial must have zero mean");
    TriangularMethod method = fourier_method(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const double amp = spec.psi(k);
        if (amp == 0.0)
            throw Error(ErrorKind::ZeroPsi, "psi(" + std::to_string(k) + ") = 0", k);
        const auto [c, s] = quarter_turn(spec.beta(k));
        const double alpha = poly.a(k);
        const double gamma = poly.b(k);
        method.lambda[k] = (alpha * c + gamma * s) / amp;
        method.mu[k] = (gamma * c - alpha * s) / amp;
    }
    return method;
}

TrigPolynomial poly_from_method(const TriangularMethod& method, const KernelSpec& spec) {
    require_valid(method);
    TrigPolynomial T = TrigPolynomial::zero(method.n);
    for (std::size_t k = 1; k <= method.n; ++k) {
        const double amp = spec.psi(k);
        const auto [c, s] = quarter_turn(spec.beta(k));
        const double lambda = method.lambda[k];
        const double mu = method.mu[k];
        T.set_harmonic(k, amp * (lambda * c - mu * s), amp * (lambda * s + mu * c));
    }
    return T;
}

} // namespace psibeta
