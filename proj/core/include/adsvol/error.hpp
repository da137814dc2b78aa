#pragma once

#include <stdexcept>
#include <string>

namespace adsvol {

enum class ErrorKind {
    Parse,
    Config,
    SignatureMismatch,
    UndefinedLength,
    BoundaryPoint,
    SidePlane,
    Degenerate,
    NotPolytope,
    DecompositionRequired,
    Replan,
    IllConditionedArc,
    NullTangent,
    ConventionViolation,
    LiftConstruction,
    NonConvergence,
    InvalidInput,
};

/// Process exit code for an error kind (stable, documented in README).
int exit_code(ErrorKind kind);
const char* kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace adsvol
