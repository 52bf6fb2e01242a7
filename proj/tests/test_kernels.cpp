#include "doctest.h"
#include "support.hpp"

#include "psibeta/error.hpp"
#include "psibeta/kernels.hpp"
#include "psibeta/oracle.hpp"

#include <cmath>
#include <numbers>

using namespace psibeta;
using doctest::Approx;

namespace {

const double pi = std::numbers::pi;

KernelSpec geometric(double q, double beta) { return {PsiSequence::geometric(q), BetaSequence::constant(beta)}; }

} // namespace

TEST_CASE("kernel_partial_sum") {
    const auto p = kernel_partial_sum(geometric(0.5, 0.0), 2);
    CHECK(p.a(1) == 0.5);
    CHECK(p.a(2) == 0.25);
    CHECK(p.b(1) == 0.0);
    CHECK(p.b(2) == 0.0);
    CHECK(p.a0() == 0.0);

    const auto r = kernel_partial_sum(geometric(0.5, 1.0), 1);
    CHECK(r.a(1) == 0.0);
    CHECK(r.b(1) == 0.5);

    CHECK(kernel_partial_sum(geometric(0.5, 0.0), 60)(0.0) == Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(kernel_partial_sum(geometric(0.5, 0.0), 0), Error);
}

TEST_CASE("kernel_eval closed forms") {
    CHECK(std::abs(kernel_eval(geometric(0.5, 0.0), 0.0, 1e-15) - 1.0) <= 2e-15);
    CHECK(std::abs(kernel_eval(geometric(0.5, 1.0), pi / 2, 1e-15) - 0.4) <= 2e-15);

    // sum q^k cos(kt) = (q cos t - q^2) / (1 - 2 q cos t + q^2)
    const double q = 0.8;
    for (double t : {-3.0, -1.0, 0.3, 2.5}) {
        const double poisson = (q * std::cos(t) - q * q) / (1.0 - 2.0 * q * std::cos(t) + q * q);
        CHECK(std::abs(kernel_eval(geometric(q, 0.0), t, 1e-13) - poisson) <= 1e-13);
    }
}

TEST_CASE("kernel_eval is periodic and matches partial sums") {
    const KernelSpec spec{PsiSequence::power_law(3.0), BetaSequence::linear(0.37)};
    const double tol = 1e-9;
    for (double t : {-2.0, 0.1, 1.7, 3.1}) {
        const double v = kernel_eval(spec, t, tol);
        CHECK(v == Approx(kernel_eval(spec, t + 2 * pi, tol)).epsilon(1e-12));
        CHECK(v == Approx(kernel_eval(spec, t - 6 * pi, tol)).epsilon(1e-12));
        const std::size_t K = 500;
        const double partial = kernel_partial_sum(spec, K)(t);
        CHECK(std::abs(v - partial) <= tol + psi_tail_abs_upper(spec.psi, K));
        CHECK(std::abs(v - testing::brute_kernel(spec, t, 200000)) <= 2 * tol);
    }
}

TEST_CASE("kernel_eval rejects slowly decaying power laws") {
    const KernelSpec spec{PsiSequence::power_law(1.0), BetaSequence::constant(0.0)};
    try {
        kernel_eval(spec, 0.5, 1e-6);
        FAIL("expected TailNotSummable");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TailNotSummable);
    }
}

TEST_CASE("difference_kernel") {
    const auto d = difference_kernel(geometric(0.5, 0.0), fourier_method(2), 4);
    CHECK(d.degree() == 4);
    CHECK(d.a(1) == 0.0);
    CHECK(d.a(2) == 0.0);
    CHECK(d.b(1) == 0.0);
    CHECK(d.a(3) == 0.125);
    CHECK(d.a(4) == 0.0625);

    const auto zero = difference_kernel(geometric(0.3, 0.7), fourier_method(6), 6);
    CHECK(zero == TrigPolynomial::zero(6));

    const auto rot = difference_kernel(geometric(0.5, 1.0), fourier_method(0), 1);
    CHECK(rot.a(1) == 0.0);
    CHECK(rot.b(1) == 0.5);

    CHECK_THROWS_AS(difference_kernel(geometric(0.5, 0.0), fourier_method(3), 2), Error);
}

TEST_CASE("difference_kernel harmonics follow the multiplier formula") {
    for (int trial = 0; trial < 20; ++trial) {
        const KernelSpec spec{PsiSequence::geometric(testing::uniform(0.1, 0.95)), testing::random_beta()};
        const std::size_t n = testing::uniform_index(0, 12);
        const auto method = testing::random_method(n);
        const std::size_t K = n + 5;
        const auto d = difference_kernel(spec, method, K);
        for (std::size_t k = 1; k <= K; ++k) {
            const double theta = spec.beta(k) * pi / 2;
            const double l = method.lambda_at(k), m = method.mu_at(k);
            // harmonic of psi(k)[(1-l) cos(kt - theta) + m sin(kt - theta)]
            const double a = spec.psi(k) * ((1 - l) * std::cos(theta) - m * std::sin(theta));
            const double b = spec.psi(k) * ((1 - l) * std::sin(theta) + m * std::cos(theta));
            CHECK(d.a(k) == Approx(a).epsilon(1e-12).scale(1.0));
            CHECK(d.b(k) == Approx(b).epsilon(1e-12).scale(1.0));
        }
    }
}

TEST_CASE("Parseval on the grid") {
    for (int trial = 0; trial < 20; ++trial) {
        const KernelSpec spec{trial % 2 ? PsiSequence::power_law(testing::uniform(0.6, 3.0))
                                        : PsiSequence::geometric(testing::uniform(0.05, 0.99)),
                              testing::random_beta()};
        const std::size_t K = testing::uniform_index(1, 200);
        std::size_t N = 2 * K + 1 + testing::uniform_index(0, 1) * 300;
        N += N % 2;
        const double grid = lp_norm_grid(GridFunction::from(kernel_partial_sum(spec, K), N), NormExponent::Two);
        const double direct = testing::brute_sq_sum(spec.psi, 0, K);
        CHECK(std::abs(grid * grid / pi - direct) <= 1e-12 * std::max(1.0, direct));
    }
}

TEST_CASE("grid samples fold harmonics above Nyquist") {
    const KernelSpec spec{PsiSequence::geometric(0.9), BetaSequence::linear(0.37)};
    for (std::size_t N : {16, 64}) {
        const std::size_t K = 5 * N + 3;
        const auto folded = kernel_grid_samples(spec, N, K);
        const auto t = periodic_grid(N);
        for (std::size_t j = 0; j < N; ++j)
            CHECK(folded[j] == Approx(testing::brute_kernel(spec, t[j], K)).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("truncation helpers") {
    const KernelSpec spec = geometric(0.5, 0.0);
    const std::size_t K = kernel_norm_truncation(spec, 1e-10);
    CHECK(psi_tail_sq_upper(spec.psi, K) < 1e-20 * pi);
    CHECK(psi_tail_sq_upper(spec.psi, K - 1) >= 1e-20 * pi);
    const std::size_t P = kernel_pointwise_truncation(spec, 1e-10);
    CHECK(psi_tail_abs_upper(spec.psi, P) <= 1e-10);
}
