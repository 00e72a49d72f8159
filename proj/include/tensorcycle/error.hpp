#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tcyc {

enum class ErrorKind {
    DivisionByZero,
    FieldMismatch,
    InvalidField,
    ParseError,
    AmbientMismatch,
    NotSymmetric,
    NotSquare,
    EmptyMultiset,
    DifferentComponents,
    NotInAlgebraicCycleSpace,
    UnknownVertex,
    EmptyStructuralData,
    NotStarShaped,
    WrongCharacteristic,
    WrongConstruction,
    InternalInconsistency,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

// A failed check here means a theorem-level identity did not hold, i.e. a bug.
inline void ensure(bool condition, const char* what) {
    if (!condition) fail(ErrorKind::InternalInconsistency, what);
}

}  // namespace tcyc
