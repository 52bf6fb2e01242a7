#include "psibeta/sequences.hpp"

#include "psibeta/compensated_sum.hpp"
#include "psibeta/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace psibeta {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};

bool finite(double x) noexcept { return std::isfinite(x); }

// Euler-Maclaurin bracket for sum_{k>=a} k^{-s}, s > 1. The summand is
// completely monotone, so the remainder after each correction term has the
// sign of, and is bounded by, the next term.
struct PowerBracket {
    double lower;
    double upper;
};

PowerBracket power_remainder(double s, double a) noexcept {
    const double f = std::pow(a, -s);
    const double integral = a * f / (s - 1.0);
    const double d1 = -s * f / a;
    const double d3 = -s * (s + 1.0) * (s + 2.0) * f / (a * a * a);
    const double upper = integral + 0.5 * f - d1 / 12.0;
    return {upper + d3 / 720.0, upper};
}

void check_geometric_ratio(double q, const char* what) {
    if (!finite(q) || q <= 0.0 || q >= 1.0)
        throw Error(ErrorKind::DomainError, std::string(what) + " must lie in (0,1), got " + std::to_string(q));
}

double geometric_sq_tail(double q, double scale, std::size_t n) noexcept {
    return scale * scale * std::pow(q, 2.0 * static_cast<double>(n + 1)) / (1.0 - q * q);
}

double geometric_abs_tail(double q, double scale, std::size_t n) noexcept {
    return std::abs(scale) * std::pow(q, static_cast<double>(n + 1)) / (1.0 - q);
}

template <class Bound>
std::size_t smallest_index_below(Bound&& bound, double eps, std::size_t cap, bool inclusive) {
    auto ok = [&](std::size_t k) { return inclusive ? bound(k) <= eps : bound(k) < eps; };
    if (ok(0))
        return 0;
    std::size_t hi = 1;
    while (hi < cap && !ok(hi))
        hi = std::min(cap, hi * 2);
    if (!ok(hi))
        return cap;
    std::size_t lo = hi / 2; // !ok(lo) holds for lo >= 1; lo = 0 handled above
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        (ok(mid) ? hi : lo) = mid;
    }
    return hi;
}

} // namespace

bool validate_square_summable(const PsiParameters& params) noexcept {
    if (const auto* p = std::get_if<PowerLawPsi>(&params))
        return p->r > 0.5;
    return true;
}

PsiSequence::PsiSequence(PsiParameters params) : params_(std::move(params)) {
    std::visit(overloaded{
                   [](const GeometricPsi& g) { check_geometric_ratio(g.q, "geometric q"); },
                   [](const PowerLawPsi& p) {
                       if (!finite(p.r))
                           throw Error(ErrorKind::DomainError, "power-law exponent must be finite");
                       if (p.r <= 0.5)
                           throw Error(ErrorKind::NotSquareSummable,
                                       "power-law exponent r=" + std::to_string(p.r) + " requires r > 1/2");
                   },
                   [](const ExplicitPsi& e) {
                       for (std::size_t i = 0; i < e.values.size(); ++i)
                           if (!finite(e.values[i]))
                               throw Error(ErrorKind::DomainError, "psi value is not finite", i + 1);
                       if (const auto* t = std::get_if<GeometricTail>(&e.tail)) {
                           check_geometric_ratio(t->q, "tail q");
                           if (!finite(t->scale))
                               throw Error(ErrorKind::DomainError, "tail scale must be finite");
                       }
                   },
               },
               params_);
}

double PsiSequence::operator()(std::size_t k) const {
    if (k == 0)
        throw Error(ErrorKind::InvalidRange, "psi is indexed from k=1");
    return std::visit(overloaded{
                          [k](const GeometricPsi& g) { return std::pow(g.q, static_cast<double>(k)); },
                          [k](const PowerLawPsi& p) { return std::pow(static_cast<double>(k), -p.r); },
                          [k](const ExplicitPsi& e) {
                              if (k <= e.values.size())
                                  return e.values[k - 1];
                              if (const auto* t = std::get_if<GeometricTail>(&e.tail))
                                  return t->scale * std::pow(t->q, static_cast<double>(k));
                              return 0.0;
                          },
                      },
                      params_);
}

std::size_t PsiSequence::stored_length() const noexcept {
    if (const auto* e = std::get_if<ExplicitPsi>(&params_))
        return e->values.size();
    return 0;
}

double psi_eval(const PsiSequence& seq, std::size_t k) { return seq(k); }

double psi_tail_sq_sum(const PsiSequence& seq, std::size_t n, double tol) {
    if (!(tol > 0.0))
        throw Error(ErrorKind::DomainError, "tail tolerance must be positive");
    return std::visit(
        overloaded{
            [n](const GeometricPsi& g) { return geometric_sq_tail(g.q, 1.0, n); },
            [n, tol](const PowerLawPsi& p) {
                if (p.r <= 0.5)
                    throw Error(ErrorKind::NotSquareSummable, "power-law tail diverges for r <= 1/2");
                const double s = 2.0 * p.r;
                constexpr std::size_t max_terms = 100'000'000;
                CompensatedSum head;
                std::size_t k = n;
                for (;;) {
                    const auto [lo, hi] = power_remainder(s, static_cast<double>(k + 1));
                    if (0.5 * (hi - lo) <= 0.5 * tol) {
                        head += 0.5 * (lo + hi);
                        return head.value();
                    }
                    if (k - n >= max_terms)
                        throw Error(ErrorKind::NoConvergence, "power-law tail tolerance unattainable");
                    ++k;
                    head += std::pow(static_cast<double>(k), -s);
                }
            },
            [n](const ExplicitPsi& e) {
                CompensatedSum acc;
                for (std::size_t k = n + 1; k <= e.values.size(); ++k)
                    acc += e.values[k - 1] * e.values[k - 1];
                if (const auto* t = std::get_if<GeometricTail>(&e.tail))
                    acc += geometric_sq_tail(t->q, t->scale, std::max(n, e.values.size()));
                return acc.value();
            },
        },
        seq.parameters());
}

double psi_tail_sq_upper(const PsiSequence& seq, std::size_t n) {
    return std::visit(overloaded{
                          [n](const GeometricPsi& g) { return geometric_sq_tail(g.q, 1.0, n); },
                          [n](const PowerLawPsi& p) {
                              return power_remainder(2.0 * p.r, static_cast<double>(n + 1)).upper;
                          },
                          [&seq, n](const ExplicitPsi&) { return psi_tail_sq_sum(seq, n, 1.0); },
                      },
                      seq.parameters());
}

double psi_tail_abs_upper(const PsiSequence& seq, std::size_t n) {
    return std::visit(overloaded{
                          [n](const GeometricPsi& g) { return geometric_abs_tail(g.q, 1.0, n); },
                          [n](const PowerLawPsi& p) {
                              if (p.r <= 1.0)
                                  throw Error(ErrorKind::TailNotSummable,
                                              "sum of |psi(k)| diverges for power law r <= 1");
                              return power_remainder(p.r, static_cast<double>(n + 1)).upper;
                          },
                          [n](const ExplicitPsi& e) {
                              CompensatedSum acc;
                              for (std::size_t k = n + 1; k <= e.values.size(); ++k)
                                  acc += std::abs(e.values[k - 1]);
                              if (const auto* t = std::get_if<GeometricTail>(&e.tail))
                                  acc += geometric_abs_tail(t->q, t->scale, std::max(n, e.values.size()));
                              return acc.value();
                          },
                      },
                      seq.parameters());
}

std::size_t l2_truncation(const PsiSequence& seq, double eps, std::size_t cap) {
    return smallest_index_below([&](std::size_t k) { return psi_tail_sq_upper(seq, k); }, eps, cap, false);
}

std::size_t l1_truncation(const PsiSequence& seq, double eps, std::size_t cap) {
    return smallest_index_below([&](std::size_t k) { return psi_tail_abs_upper(seq, k); }, eps, cap, true);
}

BetaSequence::BetaSequence(BetaParameters params) : params_(std::move(params)) {
    std::visit(overloaded{
                   [](const ConstantBeta& b) {
                       if (!finite(b.beta))
                           throw Error(ErrorKind::DomainError, "beta must be finite");
                   },
                   [](const LinearBeta& b) {
                       if (!finite(b.c))
                           throw Error(ErrorKind::DomainError, "beta slope must be finite");
                   },
                   [](const ExplicitBeta& b) {
                       for (std::size_t i = 0; i < b.values.size(); ++i)
                           if (!finite(b.values[i]))
                               throw Error(ErrorKind::DomainError, "beta value is not finite", i + 1);
                       if (!finite(b.fallback))
                           throw Error(ErrorKind::DomainError, "beta default must be finite");
                   },
               },
               params_);
}

double BetaSequence::operator()(std::size_t k) const {
    if (k == 0)
        throw Error(ErrorKind::InvalidRange, "beta is indexed from k=1");
    return std::visit(overloaded{
                          [](const ConstantBeta& b) { return b.beta; },
                          [k](const LinearBeta& b) { return b.c * static_cast<double>(k); },
                          [k](const ExplicitBeta& b) { return k <= b.values.size() ? b.values[k - 1] : b.fallback; },
                      },
                      params_);
}

std::pair<double, double> quarter_turn(double beta) noexcept {
    double r = std::fmod(beta, 4.0);
    if (r < 0.0)
        r += 4.0;
    if (r >= 4.0)
        r = 0.0;
    if (r == std::floor(r)) {
        switch (static_cast<int>(r)) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
        }
    }
    const double theta = r * std::numbers::pi / 2.0;
    return {std::cos(theta), std::sin(theta)};
}

} // namespace psibeta
