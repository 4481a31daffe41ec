#pragma once

#include <stdexcept>
#include <string>

namespace obstrukt {

enum class ErrorKind {
    DimensionMismatch,
    FieldMismatch,
    InputError,
    NotInner,
    CurvatureNotInner,
    ValueEscapesAnnihilator,
    ObstructionNonzero,
    NotCocycle,
    NotBimodule,
    DegreeOverflow,
    NucleusMismatch,
    SectionNotSection,
    ProductEscapesKernel,
    InvalidExtension,
    Internal,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline void require_dims(bool ok, const std::string& msg) {
    if (!ok) fail(ErrorKind::DimensionMismatch, msg);
}

}  // namespace obstrukt
