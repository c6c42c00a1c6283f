#include "liouville/error.hpp"

namespace liouville {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::Parse: return "Parse";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::EmptyAnchors: return "EmptyAnchors";
    case Errc::NonMonotone: return "NonMonotone";
    case Errc::BadSlope: return "BadSlope";
    case Errc::DuplicateX: return "DuplicateX";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::OutOfUnitInterval: return "OutOfUnitInterval";
    case Errc::TooSmall: return "TooSmall";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::BadDimension: return "BadDimension";
    case Errc::TooShort: return "TooShort";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotConjugable: return "NotConjugable";
    case Errc::BadMeasure: return "BadMeasure";
  }
  return "Unknown";
}

}  // namespace liouville
