#include "sgw/error.hpp"

namespace sgw {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidDomain: return "InvalidDomain";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::WrongDomainKind: return "WrongDomainKind";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::TooFewEigenvalues: return "TooFewEigenvalues";
    case ErrorCode::TooFewEigenpairs: return "TooFewEigenpairs";
    case ErrorCode::IndexOrder: return "IndexOrder";
    case ErrorCode::NotUnitGradient: return "NotUnitGradient";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace sgw
