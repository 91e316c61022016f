#pragma once

#include <stdexcept>
#include <string>

namespace schottky {

// A hyperbolic configuration that does not exist for the given arguments,
// e.g. arccosh of a value below 1. Callers decide whether that means
// "constraint vacuous" or a hard failure.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A bound was requested without asserting its length hypothesis.
class HypothesisNotSatisfied : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Enumeration or subdivision work limit reached.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NumericalBreakdown : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IncompleteMinima : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class ValidationKind {
    NotSquare,
    NotSymmetric,
    NotPositiveDefinite,
    OddDimension,
    DeterminantNotOne,
    NonFinite,
    ParseError,
    InvalidDecomposition,
};

const char* to_string(ValidationKind kind);

// Input rejected by a validator. what() is the bare kind name so the CLI
// can surface it verbatim.
class ValidationError : public std::runtime_error {
public:
    ValidationError(ValidationKind kind, const std::string& detail)
        : std::runtime_error(to_string(kind)), kind_(kind), detail_(detail) {}

    ValidationKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ValidationKind kind_;
    std::string detail_;
};

inline const char* to_string(ValidationKind kind) {
    switch (kind) {
    case ValidationKind::NotSquare: return "NotSquare";
    case ValidationKind::NotSymmetric: return "NotSymmetric";
    case ValidationKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ValidationKind::OddDimension: return "OddDimension";
    case ValidationKind::DeterminantNotOne: return "DeterminantNotOne";
    case ValidationKind::NonFinite: return "NonFinite";
    case ValidationKind::ParseError: return "ParseError";
    case ValidationKind::InvalidDecomposition: return "InvalidDecomposition";
    }
    return "Unknown";
}

} // namespace schottky
