#include "doctest.h"
#include "support.hpp"

#include "psibeta/bounds.hpp"
#include "psibeta/error.hpp"
#include "psibeta/oracle.hpp"

#include <cmath>
#include <numbers>

using namespace psibeta;
using doctest::Approx;

namespace {

const double pi = std::numbers::pi;

KernelSpec geometric(double q, double beta) { return {PsiSequence::geometric(q), BetaSequence::constant(beta)}; }

} // namespace

TEST_CASE("lp_norm_grid") {
    const TrigPolynomial cos1(0.0, {1.0}, {0.0});
    CHECK(lp_norm_grid(GridFunction::from(cos1, 64), NormExponent::Two) == Approx(std::sqrt(pi)).epsilon(1e-15));
    const GridFunction one(std::vector<double>(10, 1.0));
    CHECK(lp_norm_grid(one, NormExponent::Infinity) == 1.0);
    const GridFunction c(std::vector<double>(12, -0.75));
    CHECK(lp_norm_grid(c, NormExponent::One) == Approx(2 * pi * 0.75).epsilon(1e-15));
    CHECK_THROWS_AS(GridFunction(std::vector<double>(7, 0.0)), Error);
    CHECK_THROWS_AS(GridFunction(std::vector<double>{}), Error);
}

TEST_CASE("grid norm is independent of the grid above Nyquist") {
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t d = testing::uniform_index(0, 60);
        const auto p = testing::random_poly(d, false);
        const double a = lp_norm_grid(GridFunction::from(p, 2 * d + 2), NormExponent::Two);
        const double b = lp_norm_grid(GridFunction::from(p, 2 * d + 2 + 2 * testing::uniform_index(1, 100)), NormExponent::Two);
        CHECK(std::abs(a - b) <= 1e-13 * std::max(1.0, a));
        CHECK(a * a == Approx(p.l2_norm_sq()).epsilon(1e-12));
    }
}

TEST_CASE("oracle_truncation") {
    const auto psi = PsiSequence::geometric(0.5);
    const std::size_t K = oracle_truncation(psi);
    CHECK(psi_tail_sq_sum(psi, K, 1e-40) < pi * 1e-26);
    CHECK(psi_tail_sq_sum(psi, K - 1, 1e-40) >= pi * 1e-26);
    CHECK(oracle_truncation(PsiSequence::power_law(0.6)) == 1'000'000);
}

TEST_CASE("kernel_difference_norm_quadrature") {
    CHECK(std::abs(kernel_difference_norm_quadrature(geometric(0.5, 0.0), fourier_method(2), 1024, 60) -
                   0.08143375198381998693) <= 1e-12);

    const KernelSpec finite{PsiSequence::explicit_values({0.4, -0.2, 0.9}), BetaSequence::linear(0.5)};
    CHECK(kernel_difference_norm_quadrature(finite, fourier_method(3), 64, 3) == Approx(0.0).scale(1.0));

    const KernelSpec spec{PsiSequence::geometric(0.9), BetaSequence::linear(1.0)};
    const double quad = kernel_difference_norm_quadrature(spec, vdp_method(20, 5), 4096, 400);
    CHECK(std::abs(quad - error_vdp(spec.psi, 20, 5, 1e-15)) <= 1e-10);

    CHECK_THROWS_AS(kernel_difference_norm_quadrature(spec, fourier_method(3), 8, 4), Error);
    CHECK_THROWS_AS(kernel_difference_norm_quadrature(spec, fourier_method(5), 64, 4), Error);
}

TEST_CASE("quadrature agrees with the closed form across the suite") {
    const PsiSequence psis[] = {PsiSequence::geometric(0.3), PsiSequence::geometric(0.7), PsiSequence::geometric(0.95),
                                PsiSequence::power_law(1.0), PsiSequence::power_law(2.0)};
    const BetaSequence betas[] = {BetaSequence::constant(0.0), BetaSequence::constant(1.0), BetaSequence::linear(0.37)};
    for (const auto& psi : psis)
        for (const auto& beta : betas) {
            const KernelSpec spec{psi, beta};
            const std::size_t n = 7;
            const TriangularMethod methods[] = {fourier_method(n), vdp_method(n, 3), testing::random_method(n)};
            // power laws get the tail from the certified sum past K
            const std::size_t K = std::min<std::size_t>(oracle_truncation(psi), 3000);
            std::size_t N = 8;
            while (N <= 2 * K)
                N *= 2;
            for (const auto& M : methods)
                CHECK(std::abs(kernel_difference_norm_quadrature(spec, M, N, K) - error_triangular(psi, M, 1e-15)) <=
                      1e-10);
        }
}

TEST_CASE("Fejer lower bounds") {
    const std::size_t orders[] = {4, 16, 64, 256, 1024};
    const auto id = fejer_lower_bounds(geometric(0.5, 0.0), fourier_method(2000), orders, 0.0);
    for (double v : id)
        CHECK(v == Approx(0.0).scale(1.0));

    const auto spec = geometric(0.5, 0.0);
    const double closed = error_fourier_geometric(0.5, 2);
    const std::size_t hundred[] = {100};
    const double at100 = fejer_lower_bounds(spec, fourier_method(2), hundred, 0.0)[0];
    CHECK(at100 == Approx(0.07874800391608189645).epsilon(1e-13));
    CHECK(at100 <= closed);

    const auto chain = fejer_lower_bounds(spec, fourier_method(2), orders, 0.7);
    for (std::size_t i = 0; i < chain.size(); ++i) {
        CHECK(chain[i] <= closed + 1e-10);
        if (i > 0)
            CHECK(chain[i] >= chain[i - 1]);
    }
    CHECK(chain.back() == Approx(0.08116894405471562725).epsilon(1e-13));
    CHECK(chain.back() >= 0.9 * closed);

    const auto other = fejer_lower_bounds(KernelSpec{PsiSequence::geometric(0.8), BetaSequence::linear(0.37)},
                                          vdp_method(5, 2), orders, 0.0);
    for (double v : other)
        CHECK(v <= error_vdp(PsiSequence::geometric(0.8), 5, 2, 1e-15) + 1e-10);

    const std::size_t zero[] = {0};
    CHECK_THROWS_AS(fejer_lower_bounds(spec, fourier_method(2), zero, 0.0), Error);
}

TEST_CASE("least-squares oracle") {
    CHECK(std::abs(ls_best_l2_on_grid(geometric(0.5, 0.0), 2, 1024, 60) - 0.2558316769866221221) <= 1e-10);

    const KernelSpec finite{PsiSequence::explicit_values({0.4, -0.2}), BetaSequence::linear(0.5)};
    CHECK(ls_best_l2_on_grid(finite, 2, 16, 2) == Approx(0.0).scale(1.0));

    const auto psi = PsiSequence::geometric(0.7);
    const double flat = ls_best_l2_on_grid({psi, BetaSequence::constant(0.0)}, 4, 512, 120);
    const double phased = ls_best_l2_on_grid({psi, BetaSequence::linear(1.0)}, 4, 512, 120);
    CHECK(std::abs(flat - phased) <= 1e-12);
    CHECK(std::abs(flat - std::sqrt(pi * psi_tail_sq_sum(psi, 4, 1e-16))) <= 1e-10);

    CHECK_THROWS_AS(ls_best_l2_on_grid(geometric(0.5, 0.0), 5, 64, 4), Error);
    CHECK_THROWS_AS(ls_best_l2_on_grid(geometric(0.5, 0.0), 2, 64, 32), Error);
}
