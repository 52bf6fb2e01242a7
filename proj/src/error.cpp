#include "psibeta/error.hpp"

namespace psibeta {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NotSquareSummable: return "NotSquareSummable";
    case ErrorKind::TailNotSummable: return "TailNotSummable";
    case ErrorKind::TailUnbounded: return "TailUnbounded";
    case ErrorKind::InvalidRange: return "InvalidRange";
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::SchemeDomain: return "SchemeDomain";
    case ErrorKind::NotZeroMean: return "NotZeroMean";
    case ErrorKind::ZeroPsi: return "ZeroPsi";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotInLp: return "NotInLp";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

} // namespace psibeta
