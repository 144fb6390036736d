#ifndef TAUTCHECK_ERROR_HPP
#define TAUTCHECK_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace tautcheck {

enum class ErrorCode {
    UnknownSymbol,
    DuplicateSymbol,
    SpaceMismatch,
    OpaquePairing,
    OpaqueCoefficient,
    ZeroDenominator,
    BadParam,
    BadGenus,
    NegativeBudget,
    NonzeroHigherBoundary,
    UndefinedSplit,
    DimensionMismatch,
    MixedCodimension,
    AmbientMismatch,
    BasePointNotOnQuadric,
    DependentVectors,
    NotInComplex,
    SingularMatrix,
    ZeroInput,
    ResidualNonzero,
    NonPositiveCoefficient,
    ParseError,
};

constexpr std::string_view error_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::DuplicateSymbol: return "DuplicateSymbol";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::OpaquePairing: return "OpaquePairing";
    case ErrorCode::OpaqueCoefficient: return "OpaqueCoefficient";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::BadParam: return "BadParam";
    case ErrorCode::BadGenus: return "BadGenus";
    case ErrorCode::NegativeBudget: return "NegativeBudget";
    case ErrorCode::NonzeroHigherBoundary: return "NonzeroHigherBoundary";
    case ErrorCode::UndefinedSplit: return "UndefinedSplit";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::MixedCodimension: return "MixedCodimension";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::BasePointNotOnQuadric: return "BasePointNotOnQuadric";
    case ErrorCode::DependentVectors: return "DependentVectors";
    case ErrorCode::NotInComplex: return "NotInComplex";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::ResidualNonzero: return "ResidualNonzero";
    case ErrorCode::NonPositiveCoefficient: return "NonPositiveCoefficient";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure in the library is reported through this type; `code()`
/// identifies the contract that was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace tautcheck

#endif // TAUTCHECK_ERROR_HPP
