#pragma once

#include <string>
#include <vector>

#include "liouville/plmap.hpp"
#include "liouville/rational.hpp"

namespace liouville {

struct Atom {
  PLMap element;
  Rational weight;
};

/// A finitely supported probability measure on the group.
///
/// Weights are exact, positive and sum to one. When `symmetric` is set every
/// atom's inverse is an atom of equal weight. Non-degeneracy (the support
/// generating the group as a semigroup) is recorded as the caller's assertion
/// in `description`; it is not checked.
class ProbMeasure {
 public:
  /// Throws BadMeasure when the invariants fail.
  ProbMeasure(std::vector<Atom> atoms, bool symmetric, std::string description = {});

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  bool symmetric() const noexcept { return symmetric_; }
  const std::string& description() const noexcept { return description_; }

 private:
  std::vector<Atom> atoms_;
  bool symmetric_;
  std::string description_;
};

/// The two standard generators of F: x0 maps [0,1/2] onto [0,1/4] with slope
/// 1/2; x1 is the identity on [0,1/2] and a copy of x0 on [1/2,1].
PLMap thompson_x0();
PLMap thompson_x1();

/// 1/2 δ_id + 1/4 δ_T + 1/4 δ_T^-1 with T the unit translation.
ProbMeasure lazy_translation_measure();

/// 1/2 δ_id plus the remaining mass split uniformly over x0^±1, x1^±1.
ProbMeasure default_f_measure();

/// As default_f_measure, with T^±1 added to the uniform part.
ProbMeasure default_fr_measure();

}  // namespace liouville
