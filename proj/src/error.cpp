#include "navslip/error.hpp"

namespace navslip {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::PointOffSurface: return "PointOffSurface";
    case Errc::NotTangent: return "NotTangent";
    case Errc::UnknownCatalogName: return "UnknownCatalogName";
    case Errc::OrderTooHigh: return "OrderTooHigh";
    case Errc::SingularMode: return "SingularMode";
    case Errc::NonpositiveSlipLength: return "NonpositiveSlipLength";
    case Errc::NoConsistentSign: return "NoConsistentSign";
    case Errc::BaseConditionViolated: return "BaseConditionViolated";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::CFLViolated: return "CFLViolated";
    case Errc::NaNDetected: return "NaNDetected";
    case Errc::DomainError: return "DomainError";
    case Errc::SeriesTooShort: return "SeriesTooShort";
    case Errc::LadderRunFailed: return "LadderRunFailed";
    case Errc::TooFewPoints: return "TooFewPoints";
    case Errc::NonpositiveValue: return "NonpositiveValue";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownKey: return "UnknownKey";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::IoError: return "IoError";
    case Errc::BadMagic: return "BadMagic";
    case Errc::VersionUnsupported: return "VersionUnsupported";
    case Errc::TruncatedPayload: return "TruncatedPayload";
    }
    return "Unknown";
}

bool Error::is_validation() const noexcept {
    switch (code_) {
    case Errc::CFLViolated:
    case Errc::NaNDetected:
    case Errc::LadderRunFailed:
    case Errc::IoError:
    case Errc::BadMagic:
    case Errc::VersionUnsupported:
    case Errc::TruncatedPayload:
    case Errc::SingularMode:
        return false;
    default:
        return true;
    }
}

} // namespace navslip
