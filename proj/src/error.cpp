#include "levyexit/error.hpp"

#include <sstream>

namespace levyexit {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidAlpha: return "InvalidAlpha";
    case ErrorCode::InvalidEps: return "InvalidEps";
    case ErrorCode::InvalidDiffusion: return "InvalidDiffusion";
    case ErrorCode::DegenerateOperator: return "DegenerateOperator";
    case ErrorCode::InvalidDomain: return "InvalidDomain";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::WrongProblemKind: return "WrongProblemKind";
    case ErrorCode::Pole: return "Pole";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InvalidOptions: return "InvalidOptions";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::NonNodeProbe: return "NonNodeProbe";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

namespace {
std::string no_convergence_message(double residual, int iterations) {
    std::ostringstream os;
    os << "GMRES stopped after " << iterations << " iterations with relative residual "
       << residual;
    return os.str();
}
} // namespace

NoConvergenceError::NoConvergenceError(std::vector<double> best, double residual, int iterations)
    : Error(ErrorCode::NoConvergence, no_convergence_message(residual, iterations)),
      best_(std::move(best)), residual_(residual), iterations_(iterations) {}

} // namespace levyexit
