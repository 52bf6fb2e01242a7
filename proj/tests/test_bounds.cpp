#include "doctest.h"
#include "support.hpp"

#include "psibeta/bounds.hpp"
#include "psibeta/error.hpp"

#include <cmath>
#include <numbers>

using namespace psibeta;
using doctest::Approx;

namespace {

const double pi = std::numbers::pi;

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::Parse;
}

// Direct long-double evaluation of the error-constant sum to K terms.
double brute_triangular(const PsiSequence& psi, const TriangularMethod& M, std::size_t K) {
    long double acc = 0.0L;
    for (std::size_t k = K; k >= 1; --k) {
        const long double l = M.lambda_at(k), m = M.mu_at(k), p = psi(k);
        acc += ((1 - l) * (1 - l) + m * m) * p * p;
    }
    return static_cast<double>(std::sqrt(acc / static_cast<long double>(pi)));
}

MultiplierScheme constant_scheme(double lambda, double mu, std::optional<std::size_t> support) {
    MultiplierScheme s;
    s.lambda_at = [lambda](double, std::size_t k) { return k == 0 ? 1.0 : lambda; };
    s.mu_at = [mu](double, std::size_t k) { return k == 0 ? 0.0 : mu; };
    s.k_support = support;
    return s;
}

} // namespace

TEST_CASE("error_scheme") {
    const auto psi = PsiSequence::geometric(0.5);
    // identity up to a certified cutoff leaves only the kernel tail past it
    CHECK(error_scheme(psi, constant_scheme(1.0, 0.0, std::nullopt), 0.3, 1e-15, 10) ==
          Approx(error_fourier_geometric(0.5, 10)).epsilon(1e-15));
    CHECK(error_scheme(psi, constant_scheme(1.0, 0.0, std::nullopt), 0.3, 1e-15, 200) < 1e-60);
    const auto finite = PsiSequence::explicit_values({0.5, 0.25, 0.125});
    CHECK(error_scheme(finite, constant_scheme(1.0, 0.0, 3), 0.3, 1e-15) == 0.0);
    CHECK(error_scheme(finite, MultiplierScheme::from_triangular(fourier_method(5)), 0.0, 1e-15) == 0.0);

    const auto frozen = MultiplierScheme::from_triangular(fourier_method(2));
    CHECK(error_scheme(psi, frozen, 0.0, 1e-15) == Approx(0.08143375198381998693).epsilon(1e-15));

    const auto zero = MultiplierScheme::from_triangular(TriangularMethod{0, {1.0}, {0.0}});
    CHECK(error_scheme(psi, zero, 0.0, 1e-15) == Approx(0.32573500793527994772).epsilon(1e-15));

    // an infinite-support scheme that is zero past k = 5, certified by the caller
    MultiplierScheme cut;
    cut.lambda_at = [](double d, std::size_t k) { return k == 0 ? 1.0 : k <= 5 ? 1.0 - d / double(k + 1) : 0.0; };
    cut.mu_at = [](double d, std::size_t k) { return k == 0 || k > 5 ? 0.0 : d * 0.1; };
    TriangularMethod same{5, {}, {}};
    for (std::size_t k = 0; k <= 5; ++k) {
        same.lambda.push_back(cut.lambda_at(0.4, k));
        same.mu.push_back(cut.mu_at(0.4, k));
    }
    CHECK(error_scheme(psi, cut, 0.4, 1e-15, 5) == Approx(error_triangular(psi, same, 1e-15)).epsilon(1e-14));
    CHECK(kind_of([&] { error_scheme(psi, cut, 0.4, 1e-15); }) == ErrorKind::TailUnbounded);

    auto outside = frozen;
    outside.domain = ParameterDomain::interval(0.0, 1.0);
    CHECK(kind_of([&] { error_scheme(psi, outside, 3.0, 1e-15); }) == ErrorKind::SchemeDomain);
}

TEST_CASE("scheme and triangular paths agree") {
    for (int trial = 0; trial < 50; ++trial) {
        const auto psi = trial % 2 ? PsiSequence::geometric(testing::uniform(0.1, 0.95))
                                   : PsiSequence::power_law(testing::uniform(0.8, 3.0));
        const auto M = testing::random_method(testing::uniform_index(0, 30));
        const double tri = error_triangular(psi, M, 1e-15);
        const double sch = error_scheme(psi, MultiplierScheme::from_triangular(M), 0.0, 1e-15);
        CHECK(std::abs(tri - sch) <= 1e-14);
    }
}

TEST_CASE("error_triangular") {
    const auto psi = PsiSequence::geometric(0.5);
    CHECK(error_triangular(psi, fourier_method(2), 1e-15) == Approx(0.08143375198381998693).epsilon(1e-15));
    CHECK(error_triangular(psi, vdp_method(3, 1), 1e-15) == Approx(0.05386336401902510883).epsilon(1e-15));
    CHECK(error_triangular(PsiSequence::explicit_values({0.3, 0.7, 0.1}), fourier_method(3), 1e-15) == 0.0);
    CHECK(error_triangular(psi, fourier_method(5), 1e-15) == error_fourier(psi, 5, 1e-15));

    auto bad = fourier_method(2);
    bad.lambda[0] = 0.0;
    CHECK(kind_of([&] { error_triangular(psi, bad, 1e-15); }) == ErrorKind::ConstraintViolation);
}

TEST_CASE("error_triangular against direct summation") {
    for (int trial = 0; trial < 30; ++trial) {
        const auto psi = PsiSequence::geometric(testing::uniform(0.1, 0.9));
        const auto M = testing::random_method(testing::uniform_index(0, 25));
        CHECK(error_triangular(psi, M, 1e-15) == Approx(brute_triangular(psi, M, 2000)).epsilon(1e-14));
    }
    // power law k^-2 with V_{3,2}: weights (1 - lambda_k)^2 = 0, 1/9, 4/9, then the zeta(4) tail beyond 3
    const auto psi = PsiSequence::power_law(2.0);
    const double head = (1.0 / 9.0) / 16.0 + (4.0 / 9.0) / 81.0;
    const double tail = 1.082323233711138191516 - 1.0 - 1.0 / 16.0 - 1.0 / 81.0;
    CHECK(error_triangular(psi, vdp_method(3, 2), 1e-15) == Approx(std::sqrt((head + tail) / pi)).epsilon(1e-13));
}

TEST_CASE("error_fourier") {
    const auto psi = PsiSequence::geometric(0.5);
    CHECK(error_fourier(psi, 2, 1e-15) == Approx(0.08143375198381998693).epsilon(1e-15));
    CHECK(error_fourier(PsiSequence::explicit_values({1.0, 1.0}), 2, 1e-15) == 0.0);

    const auto slow = PsiSequence::geometric(0.9);
    double previous = error_fourier(slow, 0, 1e-15);
    for (std::size_t n = 1; n <= 50; ++n) {
        const double v = error_fourier(slow, n, 1e-15);
        CHECK(v <= previous);
        previous = v;
    }
    // zeta(2) - H_10^(2)
    CHECK(error_fourier(PsiSequence::power_law(1.0), 10, 1e-15) ==
          Approx(std::sqrt(0.09516633568168574612 / pi)).epsilon(1e-14));
}

TEST_CASE("error_fourier_geometric") {
    CHECK(error_fourier_geometric(0.5, 2) == Approx(0.08143375198381998693).epsilon(1e-15));
    CHECK(error_fourier_geometric(0.9, 0) == Approx(1.164905706165616163).epsilon(1e-15));
    CHECK(kind_of([] { error_fourier_geometric(1.0, 2); }) == ErrorKind::DomainError);
    CHECK(kind_of([] { error_fourier_geometric(-0.2, 2); }) == ErrorKind::DomainError);
    for (double q : {0.15, 0.5, 0.77, 0.93})
        for (std::size_t n : {0, 1, 5, 20, 60})
            CHECK(testing::rel_diff(error_fourier_geometric(q, n), error_fourier(PsiSequence::geometric(q), n, 1e-15)) <=
                  1e-14);
}

TEST_CASE("error_vdp") {
    const auto psi = PsiSequence::geometric(0.5);
    CHECK(error_vdp(psi, 3, 1, 1e-15) == Approx(0.05386336401902510883).epsilon(1e-15));
    for (std::size_t n : {0, 4, 17})
        CHECK(error_vdp(psi, n, 0, 1e-15) == error_fourier(psi, n, 1e-15));
    CHECK(kind_of([&] { error_vdp(psi, 3, 4, 1e-15); }) == ErrorKind::InvalidRange);
    CHECK(kind_of([&] { error_vdp(psi, 3, -1, 1e-15); }) == ErrorKind::InvalidRange);

    for (int trial = 0; trial < 50; ++trial) {
        const auto p = trial % 2 ? PsiSequence::geometric(testing::uniform(0.1, 0.95))
                                 : PsiSequence::power_law(testing::uniform(0.7, 2.5));
        const std::size_t n = testing::uniform_index(0, 60);
        const long long m = static_cast<long long>(testing::uniform_index(0, n));
        CHECK(std::abs(error_vdp(p, n, m, 1e-15) - error_triangular(p, vdp_method(n, m), 1e-15)) <= 1e-14);
    }
}

TEST_CASE("geometric taper identity") {
    const auto s = vdp_geometric_lhs_rhs(0.5, 3, 1);
    CHECK(s.lhs == Approx(0.0091145833333333333).epsilon(1e-15));
    CHECK(s.rhs == Approx(0.0091145833333333333).epsilon(1e-15));

    const auto z = vdp_geometric_lhs_rhs(0.5, 3, 0);
    CHECK(z.lhs == Approx(std::pow(0.5, 8) / 0.75).epsilon(1e-15));
    CHECK(z.rhs == Approx(std::pow(0.5, 8) / 0.75).epsilon(1e-15));

    const auto small = vdp_geometric_lhs_rhs(0.01, 5, 2);
    CHECK(small.lhs == Approx(1.111555655565556555e-17).epsilon(1e-14));
    CHECK(small.rhs == Approx(1.111555655565556555e-17).epsilon(1e-14));

    CHECK(kind_of([] { vdp_geometric_lhs_rhs(1.2, 3, 1); }) == ErrorKind::DomainError);
    CHECK(kind_of([] { vdp_geometric_lhs_rhs(0.5, 3, 5); }) == ErrorKind::InvalidRange);
}

TEST_CASE("error_vdp_geometric") {
    CHECK(error_vdp_geometric(0.5, 3, 1) == Approx(0.05386336401902510883).epsilon(1e-15));
    CHECK(error_vdp_geometric(0.5, 3, 1) == Approx(std::sqrt(0.0091145833333333333 / pi)).epsilon(1e-15));
    for (double q : {0.1, 0.5, 0.9})
        for (std::size_t n : {0, 3, 30})
            CHECK(testing::rel_diff(error_vdp_geometric(q, n, 0), error_fourier_geometric(q, n)) <= 1e-14);
    for (double q : {0.2, 0.6, 0.8})
        for (std::size_t n : {1, 10, 40})
            for (long long m : {1LL, static_cast<long long>(n / 2), static_cast<long long>(n)})
                CHECK(testing::rel_diff(error_vdp_geometric(q, n, m), error_vdp(PsiSequence::geometric(q), n, m, 1e-15)) <=
                      1e-13);
    CHECK(kind_of([] { error_vdp_geometric(0.0, 3, 1); }) == ErrorKind::DomainError);
    CHECK(kind_of([] { error_vdp_geometric(0.5, 3, 7); }) == ErrorKind::InvalidRange);
}

TEST_CASE("the Fourier method is optimal") {
    for (int trial = 0; trial < 300; ++trial) {
        const auto psi = PsiSequence::geometric(testing::uniform(0.05, 0.95));
        const std::size_t n = testing::uniform_index(1, 30);
        auto M = fourier_method(n);
        const std::size_t k = testing::uniform_index(1, n);
        M.lambda[k] += testing::uniform(0.01, 0.5) * (trial % 3 ? 1.0 : -1.0);
        M.mu[k] += testing::uniform(-0.1, 0.1);
        CHECK(error_triangular(psi, M, 1e-15) > error_fourier(psi, n, 1e-15));
    }
    // equality when the perturbation sits where psi vanishes
    const auto holey = PsiSequence::explicit_values({1.0, 0.0, 0.5, 0.25});
    auto M = fourier_method(3);
    M.lambda[2] = 0.2;
    M.mu[2] = 3.0;
    CHECK(error_triangular(holey, M, 1e-15) == error_fourier(holey, 3, 1e-15));
}
