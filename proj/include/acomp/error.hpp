#pragma once

#include <stdexcept>
#include <string>

namespace acomp {

/// Error categories surfaced by the library. The CLI maps these to exit codes.
enum class ErrorKind {
    NotMonic,
    Reducible,
    NoRealRootAboveOne,
    DivisionByZero,
    FieldMismatch,
    SyntaxError,
    UnknownLetter,
    EmptyImage,
    AlphabetMismatch,
    NotPrimitive,
    ReducibleSpectrum,
    NotAperiodic,
    KTooSmall,
    NoSplit,
    KExhausted,
    PositivePosition,
    InconsistentPermutation,
    DegreeUnsupported,
    FixtureError,
    IoError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    static const char* kind_name(ErrorKind k) {
        switch (k) {
        case ErrorKind::NotMonic: return "NotMonic";
        case ErrorKind::Reducible: return "Reducible";
        case ErrorKind::NoRealRootAboveOne: return "NoRealRootAboveOne";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownLetter: return "UnknownLetter";
        case ErrorKind::EmptyImage: return "EmptyImage";
        case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
        case ErrorKind::NotPrimitive: return "NotPrimitive";
        case ErrorKind::ReducibleSpectrum: return "ReducibleSpectrum";
        case ErrorKind::NotAperiodic: return "NotAperiodic";
        case ErrorKind::KTooSmall: return "KTooSmall";
        case ErrorKind::NoSplit: return "NoSplit";
        case ErrorKind::KExhausted: return "KExhausted";
        case ErrorKind::PositivePosition: return "PositivePosition";
        case ErrorKind::InconsistentPermutation: return "InconsistentPermutation";
        case ErrorKind::DegreeUnsupported: return "DegreeUnsupported";
        case ErrorKind::FixtureError: return "FixtureError";
        case ErrorKind::IoError: return "IoError";
        }
        return "Unknown";
    }

private:
    ErrorKind kind_;
};

} // namespace acomp
