#pragma once

// Multiplier and phase-shift sequences psi(k), beta_k (k >= 1).

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

namespace psibeta {

struct GeometricPsi {
    double q; ///< psi(k) = q^k, 0 < q < 1
};

struct PowerLawPsi {
    double r; ///< psi(k) = k^(-r)
};

struct ZeroTail {};

struct GeometricTail {
    double q;     ///< 0 < q < 1
    double scale; ///< psi(k) = scale * q^k beyond the stored values
};

using ExplicitTail = std::variant<ZeroTail, GeometricTail>;

struct ExplicitPsi {
    std::vector<double> values; ///< psi(1), ..., psi(K_max)
    ExplicitTail tail = ZeroTail{};
};

using PsiParameters = std::variant<GeometricPsi, PowerLawPsi, ExplicitPsi>;

/// True iff the parameters guarantee sum psi^2(k) < infinity.
bool validate_square_summable(const PsiParameters& params) noexcept;

class PsiSequence {
  public:
    /// Throws DomainError for malformed parameters and NotSquareSummable
    /// for a power law with r <= 1/2.
    explicit PsiSequence(PsiParameters params);

    static PsiSequence geometric(double q) { return PsiSequence(GeometricPsi{q}); }
    static PsiSequence power_law(double r) { return PsiSequence(PowerLawPsi{r}); }
    static PsiSequence explicit_values(std::vector<double> values, ExplicitTail tail = ZeroTail{}) {
        return PsiSequence(ExplicitPsi{std::move(values), tail});
    }

    const PsiParameters& parameters() const noexcept { return params_; }

    /// psi(k), k >= 1.
    double operator()(std::size_t k) const;

    /// Index past which psi is given by a closed rule (0 for the analytic variants).
    std::size_t stored_length() const noexcept;

  private:
    PsiParameters params_;
};

inline bool validate_square_summable(const PsiSequence&) noexcept { return true; }

double psi_eval(const PsiSequence& seq, std::size_t k);

/// sum_{k>n} psi^2(k) with absolute error <= tol.
double psi_tail_sq_sum(const PsiSequence& seq, std::size_t n, double tol);

/// Cheap certified upper bound on sum_{k>n} psi^2(k).
double psi_tail_sq_upper(const PsiSequence& seq, std::size_t n);

/// Certified upper bound on sum_{k>n} |psi(k)|; throws TailNotSummable for
/// a power law with r <= 1.
double psi_tail_abs_upper(const PsiSequence& seq, std::size_t n);

/// Smallest K with psi_tail_sq_upper(seq, K) < eps, capped at `cap`.
std::size_t l2_truncation(const PsiSequence& seq, double eps, std::size_t cap = 1'000'000);

/// Smallest K with psi_tail_abs_upper(seq, K) <= eps, capped at `cap`.
std::size_t l1_truncation(const PsiSequence& seq, double eps, std::size_t cap = 1'000'000);

struct ConstantBeta {
    double beta;
};

struct LinearBeta {
    double c; ///< beta_k = c * k
};

struct ExplicitBeta {
    std::vector<double> values; ///< beta_1, ..., beta_L
    double fallback = 0.0;      ///< beta_k for k > L
};

using BetaParameters = std::variant<ConstantBeta, LinearBeta, ExplicitBeta>;

class BetaSequence {
  public:
    /// Throws DomainError for non-finite entries.
    explicit BetaSequence(BetaParameters params);

    static BetaSequence constant(double beta) { return BetaSequence(ConstantBeta{beta}); }
    static BetaSequence linear(double c) { return BetaSequence(LinearBeta{c}); }

    const BetaParameters& parameters() const noexcept { return params_; }

    double operator()(std::size_t k) const;

  private:
    BetaParameters params_;
};

/// (cos, sin) of beta * pi / 2, exact when beta is an integer.
std::pair<double, double> quarter_turn(double beta) noexcept;

} // namespace psibeta
