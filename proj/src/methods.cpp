#include "psibeta/methods.hpp"

#include "psibeta/error.hpp"

#include <cmath>
#include <memory>

namespace psibeta {

std::optional<ConstraintViolation> triangular_validate(const TriangularMethod& method) {
    const std::size_t rows = method.n + 1;
    if (method.lambda.size() != rows)
        return ConstraintViolation{method.lambda.size(), "lambda must have n+1 = " + std::to_string(rows) + " entries"};
    if (method.mu.size() != rows)
        return ConstraintViolation{method.mu.size(), "mu must have n+1 = " + std::to_string(rows) + " entries"};
    if (method.lambda[0] != 1.0)
        return ConstraintViolation{0, "lambda_0 must equal 1"};
    if (method.mu[0] != 0.0)
        return ConstraintViolation{0, "mu_0 must equal 0"};
    for (std::size_t k = 1; k < rows; ++k) {
        if (!std::isfinite(method.lambda[k]))
            return ConstraintViolation{k, "lambda_" + std::to_string(k) + " is not finite"};
        if (!std::isfinite(method.mu[k]))
            return ConstraintViolation{k, "mu_" + std::to_string(k) + " is not finite"};
    }
    return std::nullopt;
}

void require_valid(const TriangularMethod& method) {
    if (auto violation = triangular_validate(method))
        throw Error(ErrorKind::ConstraintViolation, violation->message, violation->index);
}

TriangularMethod fourier_method(std::size_t n) {
    return TriangularMethod{n, std::vector<double>(n + 1, 1.0), std::vector<double>(n + 1, 0.0)};
}

TriangularMethod vdp_method(std::size_t n, long long m) {
    if (m < 0 || static_cast<unsigned long long>(m) > n)
        throw Error(ErrorKind::InvalidRange,
                    "Vallee Poussin band requires 0 <= m <= n, got n=" + std::to_string(n) + " m=" + std::to_string(m));
    TriangularMethod method = fourier_method(n);
    const auto band = static_cast<std::size_t>(m);
    const double denom = static_cast<double>(band + 1);
    for (std::size_t k = n - band + 1; k <= n; ++k)
        method.lambda[k] = 1.0 - static_cast<double>(k - (n - band)) / denom;
    return method;
}

ParameterDomain ParameterDomain::interval(double lo, double hi, std::optional<double> limit) {
    ParameterDomain d;
    d.description = "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
    d.contains = [lo, hi](double delta) { return delta >= lo && delta <= hi; };
    d.limit_point = limit;
    return d;
}

MultiplierScheme MultiplierScheme::from_triangular(TriangularMethod method) {
    require_valid(method);
    auto row = std::make_shared<const TriangularMethod>(std::move(method));
    MultiplierScheme scheme;
    scheme.domain.description = "frozen triangular row, n=" + std::to_string(row->n);
    scheme.lambda_at = [row](double, std::size_t k) { return row->lambda_at(k); };
    scheme.mu_at = [row](double, std::size_t k) { return row->mu_at(k); };
    scheme.k_support = row->n;
    return scheme;
}

void MultiplierScheme::check(double delta) const {
    if (!domain.contains || !domain.contains(delta))
        throw Error(ErrorKind::SchemeDomain, "delta=" + std::to_string(delta) + " lies outside " + domain.description);
    if (!lambda_at || !mu_at)
        throw Error(ErrorKind::ConstraintViolation, "scheme multipliers are not defined", 0);
    if (lambda_at(delta, 0) != 1.0)
        throw Error(ErrorKind::ConstraintViolation, "lambda_0(delta) must equal 1", 0);
    if (mu_at(delta, 0) != 0.0)
        throw Error(ErrorKind::ConstraintViolation, "mu_0(delta) must equal 0", 0);
}

} // namespace psibeta
