#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace absent {

// Letters live in [1:sigma]; positions are 1-based word positions, with 0 and
// n+1 used as the usual left/right sentinels.
using Letter = std::uint32_t;
using Pos = std::int32_t;

inline constexpr Pos kNoPos = -1;

enum class ErrorCode {
    EmptyInput,
    InvalidSymbol,
    OutOfRange,
    AlphabetMismatch,
    NotMasPrefix,
    NoCurrentPath,
    InvalidSkeleton,
    TooLarge,
    MalformedRecord,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::InvalidSymbol: return "InvalidSymbol";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
        case ErrorCode::NotMasPrefix: return "NotMasPrefix";
        case ErrorCode::NoCurrentPath: return "NoCurrentPath";
        case ErrorCode::InvalidSkeleton: return "InvalidSkeleton";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::MalformedRecord: return "MalformedRecord";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace absent
