#pragma once

// Shared helpers for the test suites: seeded generators and brute-force
// reference computations that avoid the library's own code paths.

#include "psibeta/kernels.hpp"
#include "psibeta/methods.hpp"
#include "psibeta/sequences.hpp"
#include "psibeta/trig_polynomial.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed'1234'abcdULL);
    return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline std::size_t uniform_index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng());
}

inline psibeta::TrigPolynomial random_poly(std::size_t degree, bool zero_mean = true) {
    std::vector<double> a(degree), b(degree);
    for (std::size_t i = 0; i < degree; ++i) {
        a[i] = uniform(-1.0, 1.0);
        b[i] = uniform(-1.0, 1.0);
    }
    return psibeta::TrigPolynomial(zero_mean ? 0.0 : uniform(-1.0, 1.0), a, b);
}

inline psibeta::TriangularMethod random_method(std::size_t n) {
    psibeta::TriangularMethod m = psibeta::fourier_method(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m.lambda[k] = uniform(-0.5, 1.5);
        m.mu[k] = uniform(-0.5, 0.5);
    }
    return m;
}

inline psibeta::BetaSequence random_beta() {
    switch (uniform_index(0, 2)) {
    case 0: return psibeta::BetaSequence::constant(uniform(-3.0, 3.0));
    case 1: return psibeta::BetaSequence::linear(uniform(-1.0, 1.0));
    default: {
        std::vector<double> v(uniform_index(1, 12));
        for (auto& x : v)
            x = uniform(-2.0, 2.0);
        return psibeta::BetaSequence(psibeta::ExplicitBeta{v, uniform(-1.0, 1.0)});
    }
    }
}

/// Direct evaluation of sum_k psi(k) cos(kt - beta_k pi/2) in long double.
inline double brute_kernel(const psibeta::KernelSpec& spec, double t, std::size_t K) {
    long double acc = 0.0L;
    const long double half_pi = 1.5707963267948966192313216916397514L;
    for (std::size_t k = 1; k <= K; ++k)
        acc += static_cast<long double>(spec.psi(k)) *
               std::cos(static_cast<long double>(k) * t - static_cast<long double>(spec.beta(k)) * half_pi);
    return static_cast<double>(acc);
}

/// Direct long-double summation of psi^2(k) for n < k <= K.
inline double brute_sq_sum(const psibeta::PsiSequence& psi, std::size_t n, std::size_t K) {
    long double acc = 0.0L;
    for (std::size_t k = K; k > n; --k) {
        const long double v = psi(k);
        acc += v * v;
    }
    return static_cast<double>(acc);
}

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

} // namespace testing
