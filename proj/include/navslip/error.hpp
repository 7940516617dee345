#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace navslip {

/// Failure categories shared by every module. The CLI maps them onto exit codes.
enum class Errc {
    PointOffSurface,
    NotTangent,
    UnknownCatalogName,
    OrderTooHigh,
    SingularMode,
    NonpositiveSlipLength,
    NoConsistentSign,
    BaseConditionViolated,
    PreconditionViolated,
    ConfigInvalid,
    CFLViolated,
    NaNDetected,
    DomainError,
    SeriesTooShort,
    LadderRunFailed,
    TooFewPoints,
    NonpositiveValue,
    SyntaxError,
    UnknownKey,
    TypeMismatch,
    IoError,
    BadMagic,
    VersionUnsupported,
    TruncatedPayload,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

    /// Validation failures (bad input) versus runtime failures (numerics, I/O).
    bool is_validation() const noexcept;

private:
    Errc code_;
};

} // namespace navslip
