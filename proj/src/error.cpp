#include "qrring/error.hpp"

namespace qrring {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::EvenPrime: return "EvenPrime";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::MixedContext: return "MixedContext";
        case ErrorKind::NotIdempotent: return "NotIdempotent";
        case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::CongruenceViolation: return "CongruenceViolation";
        case ErrorKind::SingularV: return "SingularV";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::BadLength: return "BadLength";
        case ErrorKind::NotQuadraticResidue: return "NotQuadraticResidue";
        case ErrorKind::NoSquareRoot: return "NoSquareRoot";
        case ErrorKind::EmptySubset: return "EmptySubset";
        case ErrorKind::InvalidSubset: return "InvalidSubset";
        case ErrorKind::ContextMismatch: return "ContextMismatch";
        case ErrorKind::SubsetTooLarge: return "SubsetTooLarge";
        case ErrorKind::WrongResidueClass: return "WrongResidueClass";
        case ErrorKind::NoExtensionScalar: return "NoExtensionScalar";
        case ErrorKind::EmptyCode: return "EmptyCode";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::BadPermutation: return "BadPermutation";
        case ErrorKind::InvalidParameter: return "InvalidParameter";
        case ErrorKind::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

}  // namespace qrring
