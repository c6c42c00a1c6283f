#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace liouville {

enum class Errc {
  Parse,
  InvalidArgument,
  EmptyAnchors,
  NonMonotone,
  BadSlope,
  DuplicateX,
  SizeMismatch,
  OutOfUnitInterval,
  TooSmall,
  DimensionMismatch,
  BadDimension,
  TooShort,
  BudgetExceeded,
  NotConjugable,
  BadMeasure,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (and the CLI) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace liouville
