#include "tensorcycle/error.hpp"

namespace tcyc {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::InvalidField: return "InvalidField";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::AmbientMismatch: return "AmbientMismatch";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::NotSquare: return "NotSquare";
        case ErrorKind::EmptyMultiset: return "EmptyMultiset";
        case ErrorKind::DifferentComponents: return "DifferentComponents";
        case ErrorKind::NotInAlgebraicCycleSpace: return "NotInAlgebraicCycleSpace";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::EmptyStructuralData: return "EmptyStructuralData";
        case ErrorKind::NotStarShaped: return "NotStarShaped";
        case ErrorKind::WrongCharacteristic: return "WrongCharacteristic";
        case ErrorKind::WrongConstruction: return "WrongConstruction";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace tcyc
