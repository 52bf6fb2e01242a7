#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace psibeta {

/// a0/2 + sum_{k=1}^N (a_k cos kt + b_k sin kt).
class TrigPolynomial {
  public:
    TrigPolynomial() = default;
    /// Throws InvalidRange when the coefficient lists differ in length.
    TrigPolynomial(double a0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);

    static TrigPolynomial zero(std::size_t degree) {
        return TrigPolynomial(0.0, std::vector<double>(degree, 0.0), std::vector<double>(degree, 0.0));
    }
    static TrigPolynomial constant(double value) { return TrigPolynomial(2.0 * value, {}, {}); }

    std::size_t degree() const noexcept { return cos_.size(); }
    double a0() const noexcept { return a0_; }
    std::span<const double> cos_coeffs() const noexcept { return cos_; }
    std::span<const double> sin_coeffs() const noexcept { return sin_; }

    /// a_k, b_k for k >= 1; zero beyond the degree.
    double a(std::size_t k) const noexcept { return k >= 1 && k <= cos_.size() ? cos_[k - 1] : 0.0; }
    double b(std::size_t k) const noexcept { return k >= 1 && k <= sin_.size() ? sin_[k - 1] : 0.0; }

    void set_a0(double value) noexcept { a0_ = value; }
    void set_harmonic(std::size_t k, double a_k, double b_k);

    /// a_k^2 + b_k^2.
    double amplitude_sq(std::size_t k) const noexcept { return a(k) * a(k) + b(k) * b(k); }

    /// pi * (a0^2/2 + sum (a_k^2 + b_k^2)).
    double l2_norm_sq() const noexcept;

    double operator()(double t) const noexcept;

    /// Values at t_j = -pi + 2 pi j / N.
    std::vector<double> sample(std::size_t N) const;

    /// Copy truncated (or zero-padded) to the given degree.
    TrigPolynomial resized(std::size_t degree) const;

    TrigPolynomial& operator+=(const TrigPolynomial& other);
    TrigPolynomial& operator-=(const TrigPolynomial& other);
    TrigPolynomial& operator*=(double s) noexcept;

    friend TrigPolynomial operator+(TrigPolynomial lhs, const TrigPolynomial& rhs) { return lhs += rhs; }
    friend TrigPolynomial operator-(TrigPolynomial lhs, const TrigPolynomial& rhs) { return lhs -= rhs; }
    friend TrigPolynomial operator*(double s, TrigPolynomial p) { return p *= s; }

    friend bool operator==(const TrigPolynomial&, const TrigPolynomial&) = default;

  private:
    double a0_ = 0.0;
    std::vector<double> cos_;
    std::vector<double> sin_;
};

/// Uniform periodic grid t_j = -pi + 2 pi j / N.
std::vector<double> periodic_grid(std::size_t N);

} // namespace psibeta
