#pragma once

// Summation operators U_n(Lambda; M), U_delta(lambda; mu) and the convolution
// structure of the class, all acting on Fourier coefficients.

#include "psibeta/kernels.hpp"
#include "psibeta/methods.hpp"
#include "psibeta/trig_polynomial.hpp"

namespace psibeta {

/// Degree-n result; harmonics of f above n are dropped.
TrigPolynomial apply_triangular(const TrigPolynomial& f, const TriangularMethod& method);

/// Transforms every harmonic of f with lambda_k(delta), mu_k(delta).
TrigPolynomial apply_scheme(const TrigPolynomial& f, const MultiplierScheme& scheme, double delta);

/// f = a0/2 + (1/pi) int phi(x - t) Psi_beta(t) dt for zero-mean phi.
/// Throws NotZeroMean if phi has a constant term.
TrigPolynomial synthesize_class_function(const TrigPolynomial& phi, const KernelSpec& spec, double a0);

/// The (psi, beta)-derivative: inverse of synthesize_class_function on the
/// non-constant part. Throws ZeroPsi(k) if a nonzero harmonic meets psi(k) = 0.
TrigPolynomial psi_beta_derivative(const TrigPolynomial& f, const KernelSpec& spec);

/// a0/2 + (1/pi) int phi(x - t) T(t) dt with T of zero mean.
TrigPolynomial convolve(const TrigPolynomial& phi, const TrigPolynomial& T, double a0);

} // namespace psibeta
