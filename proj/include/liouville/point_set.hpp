#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "liouville/dyadic.hpp"

namespace liouville {

/// An n-element subset of the dyadic rationals, held as a strictly increasing
/// list of points.
class PointSet {
 public:
  PointSet() = default;

  /// Sorts the input; throws InvalidArgument on duplicates.
  explicit PointSet(std::vector<Dyadic> points);
  PointSet(std::initializer_list<Dyadic> points)
      : PointSet(std::vector<Dyadic>(points)) {}

  /// Trusts the caller that the input is already strictly increasing.
  static PointSet from_sorted(std::vector<Dyadic> points);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const Dyadic& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Dyadic> points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  /// Comma-separated canonical dyadic text, e.g. "0,3/2^1".
  std::string to_string() const;
  static PointSet parse(std::string_view text);

  friend bool operator==(const PointSet&, const PointSet&) = default;
  friend std::strong_ordering operator<=>(const PointSet& a, const PointSet& b) {
    return a.points_ <=> b.points_;
  }

 private:
  std::vector<Dyadic> points_;
};

/// All k-element subsets of `support`, in lexicographic order of indices.
std::vector<PointSet> subsets_of_size(const PointSet& support, std::size_t k);

}  // namespace liouville
