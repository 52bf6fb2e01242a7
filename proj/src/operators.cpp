#include "psibeta/operators.hpp"

#include "psibeta/error.hpp"

#include <algorithm>

namespace psibeta {

namespace {

// lambda (a cos + b sin) + mu (-b cos + a sin)
std::pair<double, double> multiply(double a, double b, double lambda, double mu) noexcept {
    return {lambda * a - mu * b, lambda * b + mu * a};
}

} // namespace

TrigPolynomial apply_triangular(const TrigPolynomial& f, const TriangularMethod& method) {
    require_valid(method);
    TrigPolynomial out = TrigPolynomial::zero(method.n);
    out.set_a0(f.a0());
    for (std::size_t k = 1; k <= method.n; ++k) {
        const auto [a, b] = multiply(f.a(k), f.b(k), method.lambda[k], method.mu[k]);
        out.set_harmonic(k, a, b);
    }
    return out;
}

TrigPolynomial apply_scheme(const TrigPolynomial& f, const MultiplierScheme& scheme, double delta) {
    scheme.check(delta);
    TrigPolynomial out = TrigPolynomial::zero(f.degree());
    out.set_a0(f.a0());
    for (std::size_t k = 1; k <= f.degree(); ++k) {
        const bool supported = !scheme.k_support || k <= *scheme.k_support;
        const double lambda = supported ? scheme.lambda_at(delta, k) : 0.0;
        const double mu = supported ? scheme.mu_at(delta, k) : 0.0;
        const auto [a, b] = multiply(f.a(k), f.b(k), lambda, mu);
        out.set_harmonic(k, a, b);
    }
    return out;
}

TrigPolynomial synthesize_class_function(const TrigPolynomial& phi, const KernelSpec& spec, double a0) {
    if (phi.a0() != 0.0)
        throw Error(ErrorKind::NotZeroMean, "the (psi,beta)-derivative must be orthogonal to constants");
    TrigPolynomial f = TrigPolynomial::zero(phi.degree());
    f.set_a0(a0);
    for (std::size_t k = 1; k <= phi.degree(); ++k) {
        const double amp = spec.psi(k);
        const auto [c, s] = quarter_turn(spec.beta(k));
        const double ck = phi.a(k);
        const double dk = phi.b(k);
        f.set_harmonic(k, amp * (ck * c - dk * s), amp * (dk * c + ck * s));
    }
    return f;
}

TrigPolynomial psi_beta_derivative(const TrigPolynomial& f, const KernelSpec& spec) {
    TrigPolynomial phi = TrigPolynomial::zero(f.degree());
    for (std::size_t k = 1; k <= f.degree(); ++k) {
        const double ak = f.a(k);
        const double bk = f.b(k);
        if (ak == 0.0 && bk == 0.0)
            continue;
        const double amp = spec.psi(k);
        if (amp == 0.0)
            throw Error(ErrorKind::ZeroPsi, "psi(" + std::to_string(k) + ") = 0 under a nonzero harmonic", k);
        const auto [c, s] = quarter_turn(spec.beta(k));
        phi.set_harmonic(k, (ak * c + bk * s) / amp, (bk * c - ak * s) / amp);
    }
    return phi;
}

TrigPolynomial convolve(const TrigPolynomial& phi, const TrigPolynomial& T, double a0) {
    if (T.a0() != 0.0)
        throw Error(ErrorKind::NotZeroMean, "convolution polynomial must have zero mean");
    const std::size_t degree = std::min(phi.degree(), T.degree());
    TrigPolynomial out = TrigPolynomial::zero(degree);
    out.set_a0(a0);
    for (std::size_t k = 1; k <= degree; ++k) {
        const double c = phi.a(k);
        const double d = phi.b(k);
        const double alpha = T.a(k);
        const double gamma = T.b(k);
        out.set_harmonic(k, c * alpha - d * gamma, c * gamma + d * alpha);
    }
    return out;
}

} // namespace psibeta
