#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qthue {

enum class ErrorCode {
    InvalidArgument,
    DegenerateForm,
    NotDiagonalizable,
    NumericalFailure,
    ZeroValue,
    ZeroPair,
    PrecisionExhausted,
    NotSquarefree,
    NormalizationFailure,
    PropositionViolation,
    Internal,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DegenerateForm: return "DegenerateForm";
        case ErrorCode::NotDiagonalizable: return "NotDiagonalizable";
        case ErrorCode::NumericalFailure: return "NumericalFailure";
        case ErrorCode::ZeroValue: return "ZeroValue";
        case ErrorCode::ZeroPair: return "ZeroPair";
        case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorCode::NotSquarefree: return "NotSquarefree";
        case ErrorCode::NormalizationFailure: return "NormalizationFailure";
        case ErrorCode::PropositionViolation: return "PropositionViolation";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

inline void require(bool condition, const std::string& message) {
    if (!condition) fail(ErrorCode::InvalidArgument, message);
}

}  // namespace qthue
