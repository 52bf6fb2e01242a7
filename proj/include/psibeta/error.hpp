#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace psibeta {

enum class ErrorKind {
    NotSquareSummable,
    TailNotSummable,
    TailUnbounded,
    InvalidRange,
    ConstraintViolation,
    SchemeDomain,
    NotZeroMean,
    ZeroPsi,
    DomainError,
    NotInLp,
    NoConvergence,
    Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Library error. `index()` carries the offending harmonic or matrix index
/// for ConstraintViolation and ZeroPsi.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what, std::optional<std::size_t> index = std::nullopt)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), index_(index) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> index() const noexcept { return index_; }

  private:
    ErrorKind kind_;
    std::optional<std::size_t> index_;
};

} // namespace psibeta
