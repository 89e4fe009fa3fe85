#ifndef FACIAL_ERROR_HPP
#define FACIAL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace facial {

enum class ErrorCode {
    DimensionMismatch,
    EmptyInput,
    EmptySet,
    NotMember,
    UnsupportedStrict,
    UnsupportedRays,
    UnsupportedComposite,
    ZeroScale,
    ContainsOrigin,
    TooLarge,
    ParentMismatch,
    NotProperFace,
    Unrepresentable,
    MethodDisagreement,
    IsInteriorPoint,
    OverlappingInteriors,
    NotProperlySeparable,
    ChainNotNested,
    Format,
};

inline std::string_view error_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::UnsupportedStrict: return "UnsupportedStrict";
    case ErrorCode::UnsupportedRays: return "UnsupportedRays";
    case ErrorCode::UnsupportedComposite: return "UnsupportedComposite";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::ContainsOrigin: return "ContainsOrigin";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParentMismatch: return "ParentMismatch";
    case ErrorCode::NotProperFace: return "NotProperFace";
    case ErrorCode::Unrepresentable: return "Unrepresentable";
    case ErrorCode::MethodDisagreement: return "MethodDisagreement";
    case ErrorCode::IsInteriorPoint: return "IsInteriorPoint";
    case ErrorCode::OverlappingInteriors: return "OverlappingInteriors";
    case ErrorCode::NotProperlySeparable: return "NotProperlySeparable";
    case ErrorCode::ChainNotNested: return "ChainNotNested";
    case ErrorCode::Format: return "Format";
    }
    return "Unknown";
}

/// All library failures. `code()` identifies the contract violation.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code), detail_(what)
    {
    }
    ErrorCode code() const noexcept { return code_; }
    /// The message without the code prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

} // namespace facial

#endif // FACIAL_ERROR_HPP
