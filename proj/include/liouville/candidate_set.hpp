#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liouville/rational.hpp"

namespace liouville {

using Row = std::vector<BigInt>;

/// A finite multiset of d-tuples of positive integers (rows may repeat).
class CandidateSet {
 public:
  CandidateSet() = default;
  /// Throws BadDimension for a row of the wrong length and InvalidArgument
  /// for a non-positive entry.
  CandidateSet(std::size_t dim, std::vector<Row> rows);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  const Row& operator[](std::size_t i) const { return rows_[i]; }

  /// Rows separated by ';', entries by ',' (e.g. "1,1,2;2,1,1").
  std::string to_string() const;
  static CandidateSet parse(std::string_view text);

  friend bool operator==(const CandidateSet&, const CandidateSet&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Row> rows_;
};

}  // namespace liouville
