#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace levyexit {

enum class ErrorCode {
    InvalidAlpha,
    InvalidEps,
    InvalidDiffusion,
    DegenerateOperator,
    InvalidDomain,
    InvalidGrid,
    DomainMismatch,
    WrongProblemKind,
    Pole,
    DomainError,
    LengthMismatch,
    SingularMatrix,
    NoConvergence,
    InvalidOptions,
    BudgetExhausted,
    NonNodeProbe,
    ConfigError,
    IoError,
};

std::string_view to_string(ErrorCode code);

/// Library-wide exception. `code()` identifies which contract was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Thrown by GMRES when the iteration budget runs out; keeps the best iterate.
class NoConvergenceError : public Error {
public:
    NoConvergenceError(std::vector<double> best, double residual, int iterations);

    const std::vector<double>& best_iterate() const noexcept { return best_; }
    double residual() const noexcept { return residual_; }
    int iterations() const noexcept { return iterations_; }

private:
    std::vector<double> best_;
    double residual_;
    int iterations_;
};

} // namespace levyexit
