#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "liouville/dyadic.hpp"
#include "liouville/point_set.hpp"

namespace liouville {

struct Anchor {
  Dyadic x;
  Dyadic y;

  friend bool operator==(const Anchor&, const Anchor&) = default;
};

/// An element of the group of piecewise-linear homeomorphisms of the real
/// line with power-of-two slopes and dyadic breakpoints.
///
/// The map is the linear interpolation of its anchors, extended to the left
/// of the first anchor with slope 2^left_exp and to the right of the last with
/// slope 2^right_exp. Instances are always canonical: every anchor is a genuine
/// slope change, except that an affine map carries exactly one anchor at x = 0.
/// Canonical form makes operator== group-element equality.
class PLMap {
 public:
  /// Validates and canonicalizes. Anchors may be given in any x order.
  /// Throws EmptyAnchors, DuplicateX, NonMonotone or BadSlope.
  static PLMap make(std::vector<Anchor> anchors, std::int64_t left_exp,
                    std::int64_t right_exp);

  static PLMap identity();
  static PLMap translation(const Dyadic& d);
  static PLMap scale_pow2(std::int64_t i);

  const std::vector<Anchor>& anchors() const noexcept { return anchors_; }
  std::int64_t left_exp() const noexcept { return left_exp_; }
  std::int64_t right_exp() const noexcept { return right_exp_; }

  /// Slope exponent of the piece between anchors i and i+1.
  std::int64_t segment_exp(std::size_t i) const { return segment_exps_[i]; }

  bool is_identity() const noexcept;
  bool is_affine() const noexcept { return anchors_.size() == 1; }

  Dyadic apply(const Dyadic& x) const;
  Dyadic operator()(const Dyadic& x) const { return apply(x); }
  Dyadic apply_inverse(const Dyadic& y) const;

  PLMap inverse() const;

  /// T_d ∘ this, where T_d is translation by d.
  PLMap shifted(const Dyadic& d) const;

  /// True iff the map fixes every point outside the open unit interval,
  /// i.e. the map lies in Thompson's group F.
  bool in_thompson_f() const;

  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  PLMap() = default;
  static PLMap canonical(std::vector<Anchor> anchors, std::vector<std::int64_t> exps,
                         std::int64_t left_exp, std::int64_t right_exp);
  std::size_t piece_index(const Dyadic& x) const;

  std::vector<Anchor> anchors_;
  std::vector<std::int64_t> segment_exps_;
  std::int64_t left_exp_ = 0;
  std::int64_t right_exp_ = 0;
};

/// g ∘ f.
PLMap compose(const PLMap& g, const PLMap& f);

/// f^k for any integer k.
PLMap power(const PLMap& f, std::int64_t k);

enum class WitnessMode { F, FR };

/// A group element sending the i-th point of `src` to the i-th point of
/// `dst`. In FR mode the tails are translations; in F mode every point must
/// lie in (0,1) and the result is the identity outside [0,1].
/// Throws SizeMismatch or OutOfUnitInterval.
PLMap transitivity_witness(const PointSet& src, const PointSet& dst, WitnessMode mode);

/// The piecewise-linear bijection (0,1) -> R sending [2^-k-1, 2^-k] onto
/// [-k, -k+1] and [1-2^-k, 1-2^-k-1] onto [k-1, k] for k >= 1.
Dyadic unit_to_line(const Dyadic& x);
Dyadic line_to_unit(const Dyadic& y);

/// The conjugate unit_to_line^-1 ∘ g ∘ unit_to_line as an element of F.
/// Requires g to be an integer translation on both tails; otherwise the
/// conjugate has infinitely many breakpoints and NotConjugable is thrown.
PLMap conjugate_into_unit_interval(const PLMap& g);

}  // namespace liouville
