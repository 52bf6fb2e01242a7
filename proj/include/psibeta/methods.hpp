#pragma once

// Linear summation methods: triangular matrices (one row per order n) and
// delta-parametrised multiplier families.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace psibeta {

/// One row of the triangular matrices: lambda_0..lambda_n and mu_0..mu_n.
/// Entries beyond n are zero and are not stored.
struct TriangularMethod {
    std::size_t n = 0;
    std::vector<double> lambda;
    std::vector<double> mu;

    double lambda_at(std::size_t k) const noexcept { return k <= n && k < lambda.size() ? lambda[k] : 0.0; }
    double mu_at(std::size_t k) const noexcept { return k <= n && k < mu.size() ? mu[k] : 0.0; }

    friend bool operator==(const TriangularMethod&, const TriangularMethod&) = default;
};

struct ConstraintViolation {
    std::size_t index;
    std::string message;
};

/// Empty when lambda_0 = 1, mu_0 = 0, both rows have n+1 finite entries.
std::optional<ConstraintViolation> triangular_validate(const TriangularMethod& method);

/// Throws Error(ConstraintViolation) carrying the offending index.
void require_valid(const TriangularMethod& method);

TriangularMethod fourier_method(std::size_t n);

/// de la Vallee Poussin sums V_{n,m}; throws InvalidRange unless 0 <= m <= n.
TriangularMethod vdp_method(std::size_t n, long long m);

/// The parameter set E. Only membership is enforced; the limit point is
/// carried as metadata.
struct ParameterDomain {
    std::string description = "R";
    std::function<bool(double)> contains = [](double) { return true; };
    std::optional<double> limit_point;

    static ParameterDomain interval(double lo, double hi, std::optional<double> limit = std::nullopt);
};

/// The family lambda_k(delta), mu_k(delta). Callables are queried at every
/// k >= 0; index 0 must give (1, 0). `k_support`, when set, certifies that
/// lambda_k = mu_k = 0 for k > k_support.
struct MultiplierScheme {
    ParameterDomain domain;
    std::function<double(double, std::size_t)> lambda_at;
    std::function<double(double, std::size_t)> mu_at;
    std::optional<std::size_t> k_support;

    /// Freezes a triangular row into a delta-independent scheme with finite support.
    static MultiplierScheme from_triangular(TriangularMethod method);

    /// Throws SchemeDomain if delta is outside E, ConstraintViolation if
    /// index 0 is not (1, 0) at delta.
    void check(double delta) const;
};

} // namespace psibeta
