#pragma once

#include <stdexcept>
#include <string>

namespace asq {

// Error taxonomy. Codes split into two families: parameter/format problems
// (rejected before any math runs) and mathematical failures detected during
// construction or verification. The CLI maps the first family to exit 2 and
// the second to exit 1.
enum class ErrorCode {
    // parameter / format
    NotPrime,
    SizeCap,
    BadDivisor,
    IndexOutOfRange,
    DimMismatch,
    FormatError,
    HashMismatch,
    // mathematical
    NonSymmetric,
    NotHermitian,
    NotDensity,
    NotOrthonormal,
    CompletionFailed,
    NotSymmetric,
    DecompositionUnstable,
    SingularNormalizer,
    NotPseudocyclic,
    TSmall,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::SizeCap: return "SizeCap";
        case ErrorCode::BadDivisor: return "BadDivisor";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::DimMismatch: return "DimMismatch";
        case ErrorCode::FormatError: return "FormatError";
        case ErrorCode::HashMismatch: return "HashMismatch";
        case ErrorCode::NonSymmetric: return "NonSymmetric";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NotDensity: return "NotDensity";
        case ErrorCode::NotOrthonormal: return "NotOrthonormal";
        case ErrorCode::CompletionFailed: return "CompletionFailed";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::DecompositionUnstable: return "DecompositionUnstable";
        case ErrorCode::SingularNormalizer: return "SingularNormalizer";
        case ErrorCode::NotPseudocyclic: return "NotPseudocyclic";
        case ErrorCode::TSmall: return "TSmall";
    }
    return "Unknown";
}

// True for codes the CLI reports as usage/format errors (exit 2) rather than
// mathematical failures (exit 1).
inline bool is_usage_error(ErrorCode c) {
    switch (c) {
        case ErrorCode::NotPrime:
        case ErrorCode::SizeCap:
        case ErrorCode::BadDivisor:
        case ErrorCode::IndexOutOfRange:
        case ErrorCode::DimMismatch:
        case ErrorCode::FormatError:
        case ErrorCode::HashMismatch:
            return true;
        default:
            return false;
    }
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace asq
