#include "psibeta/trig_polynomial.hpp"

#include "psibeta/compensated_sum.hpp"
#include "psibeta/error.hpp"

#include <cmath>
#include <numbers>

namespace psibeta {

TrigPolynomial::TrigPolynomial(double a0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs)
    : a0_(a0), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
    if (cos_.size() != sin_.size())
        throw Error(ErrorKind::InvalidRange, "cos and sin coefficient lists must have equal length");
}

void TrigPolynomial::set_harmonic(std::size_t k, double a_k, double b_k) {
    if (k == 0)
        throw Error(ErrorKind::InvalidRange, "harmonics are indexed from k=1");
    if (k > cos_.size()) {
        cos_.resize(k, 0.0);
        sin_.resize(k, 0.0);
    }
    cos_[k - 1] = a_k;
    sin_[k - 1] = b_k;
}

double TrigPolynomial::l2_norm_sq() const noexcept {
    CompensatedSum acc(0.5 * a0_ * a0_);
    for (std::size_t i = 0; i < cos_.size(); ++i)
        acc += cos_[i] * cos_[i] + sin_[i] * sin_[i];
    return std::numbers::pi * acc.value();
}

double TrigPolynomial::operator()(double t) const noexcept {
    CompensatedSum acc(0.5 * a0_);
    for (std::size_t i = 0; i < cos_.size(); ++i) {
        const double kt = static_cast<double>(i + 1) * t;
        acc += cos_[i] * std::cos(kt) + sin_[i] * std::sin(kt);
    }
    return acc.value();
}

std::vector<double> TrigPolynomial::sample(std::size_t N) const {
    if (N == 0)
        return {};
    // k t_j = -k pi + 2 pi (k j mod N) / N, so one table of N angles suffices.
    std::vector<double> cos_table(N), sin_table(N);
    for (std::size_t i = 0; i < N; ++i) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(N);
        cos_table[i] = std::cos(angle);
        sin_table[i] = std::sin(angle);
    }
    std::vector<double> out(N);
    for (std::size_t j = 0; j < N; ++j) {
        CompensatedSum acc(0.5 * a0_);
        std::size_t idx = 0; // k j mod N
        double sign = 1.0;   // (-1)^k
        for (std::size_t i = 0; i < cos_.size(); ++i) {
            idx += j;
            if (idx >= N)
                idx -= N;
            sign = -sign;
            acc += sign * (cos_[i] * cos_table[idx] + sin_[i] * sin_table[idx]);
        }
        out[j] = acc.value();
    }
    return out;
}

TrigPolynomial TrigPolynomial::resized(std::size_t degree) const {
    TrigPolynomial out = *this;
    out.cos_.resize(degree, 0.0);
    out.sin_.resize(degree, 0.0);
    return out;
}

TrigPolynomial& TrigPolynomial::operator+=(const TrigPolynomial& other) {
    if (other.degree() > degree()) {
        cos_.resize(other.degree(), 0.0);
        sin_.resize(other.degree(), 0.0);
    }
    a0_ += other.a0_;
    for (std::size_t i = 0; i < other.degree(); ++i) {
        cos_[i] += other.cos_[i];
        sin_[i] += other.sin_[i];
    }
    return *this;
}

TrigPolynomial& TrigPolynomial::operator-=(const TrigPolynomial& other) {
    TrigPolynomial negated = other;
    negated *= -1.0;
    return *this += negated;
}

TrigPolynomial& TrigPolynomial::operator*=(double s) noexcept {
    a0_ *= s;
    for (auto& c : cos_)
        c *= s;
    for (auto& c : sin_)
        c *= s;
    return *this;
}

std::vector<double> periodic_grid(std::size_t N) {
    std::vector<double> t(N);
    for (std::size_t j = 0; j < N; ++j)
        t[j] = -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(N);
    return t;
}

} // namespace psibeta
