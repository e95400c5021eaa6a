#pragma once

#include <stdexcept>
#include <string>

namespace mbp {

enum class ErrorKind {
    EmptyFamily,
    UnequalSizes,
    ExchangeAxiomViolated,
    LabelCollision,
    BadParameters,
    ContractNonexistent,
    NotFactorConnected,
    GroundSetTooLarge,
    NotGraded,
    NotEulerian,
    NotRepresentable,
    NotHomogeneous,
    DefinitionMismatch,
    NotComparable,
    NotFaceLattice,
    OddCoefficients,
    RankMismatch,
    InvariantViolation,
    NotAFace,
    NotABasis,
    IndexOutOfRange,
    BadM,
    InputParse,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::EmptyFamily: return "EmptyFamily";
        case ErrorKind::UnequalSizes: return "UnequalSizes";
        case ErrorKind::ExchangeAxiomViolated: return "ExchangeAxiomViolated";
        case ErrorKind::LabelCollision: return "LabelCollision";
        case ErrorKind::BadParameters: return "BadParameters";
        case ErrorKind::ContractNonexistent: return "ContractNonexistent";
        case ErrorKind::NotFactorConnected: return "NotFactorConnected";
        case ErrorKind::GroundSetTooLarge: return "GroundSetTooLarge";
        case ErrorKind::NotGraded: return "NotGraded";
        case ErrorKind::NotEulerian: return "NotEulerian";
        case ErrorKind::NotRepresentable: return "NotRepresentable";
        case ErrorKind::NotHomogeneous: return "NotHomogeneous";
        case ErrorKind::DefinitionMismatch: return "DefinitionMismatch";
        case ErrorKind::NotComparable: return "NotComparable";
        case ErrorKind::NotFaceLattice: return "NotFaceLattice";
        case ErrorKind::OddCoefficients: return "OddCoefficients";
        case ErrorKind::RankMismatch: return "RankMismatch";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::NotAFace: return "NotAFace";
        case ErrorKind::NotABasis: return "NotABasis";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::BadM: return "BadM";
        case ErrorKind::InputParse: return "InputParse";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace mbp
