#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "liouville/candidate_set.hpp"
#include "liouville/multiset.hpp"
#include "liouville/rational.hpp"

namespace liouville {

/// Half-open coordinate range [first, last) summed into one key component.
using CoordRange = std::pair<std::size_t, std::size_t>;

/// One intersectand: each row maps to the key (Σ range_1, Σ range_2, ...).
struct Term {
  std::vector<CoordRange> components;

  friend bool operator==(const Term&, const Term&) = default;
};

enum class ObjectiveKind { Pair3, General, Chain, Sequence };

/// Which intersection of projection multisets is being measured.
///
///  - Pair3: (p1,p2), (p2,p3), (p1+p2,p3), (p1,p2+p3) on 3-dimensional rows.
///  - General(n): (p_i+..+p_k, p_k+1+..+p_m) for 1 <= i <= k < m <= n.
///  - Chain(d): every consecutive sum p_i+..+p_j, 1 <= i <= j <= d.
///  - Sequence: on one sequence a_1..a_n, the pairs (a_i, a_i+1),
///    (a_j+a_j+1, a_j+2) and (a_k, a_k+1+a_k+2).
class Objective {
 public:
  static Objective pair3();
  static Objective general(std::size_t n);
  static Objective chain(std::size_t d);
  static Objective sequence();

  ObjectiveKind kind() const noexcept { return kind_; }
  /// Row dimension; 0 for Sequence (any length >= 3).
  std::size_t dimension() const noexcept { return dim_; }
  /// Term descriptor. Empty for Sequence, whose terms are positional.
  const std::vector<Term>& terms() const noexcept { return terms_; }

  /// "pair3", "general(4)", "chain(2)" or "sequence".
  std::string id() const;
  static Objective parse(std::string_view name, std::size_t dim);

 private:
  ObjectiveKind kind_ = ObjectiveKind::Pair3;
  std::size_t dim_ = 0;
  std::vector<Term> terms_;
};

/// Weak: key-wise minimum over terms, contributions may come from different
/// rows. MatchedRows: only rows whose keys agree across every term count.
enum class IntersectionMode { Weak, MatchedRows };

using Key = std::vector<BigInt>;

/// Key-wise minimum of multiplicities over a non-empty list.
Multiset<Key> multiset_intersect(std::span<const Multiset<Key>> ms);

/// The multiset {term(x) : x in V}.
Multiset<Key> term_multiset(const Term& term, const CandidateSet& v);

/// |intersection| / |V| for a row objective. Throws BadDimension when V's
/// dimension does not fit, InvalidArgument when V is empty.
Rational evaluate(const Objective& objective, const CandidateSet& v,
                  IntersectionMode mode = IntersectionMode::Weak);

Rational objective_pair3(const CandidateSet& v, IntersectionMode mode = IntersectionMode::Weak);
Rational objective_general(std::size_t n, const CandidateSet& v,
                           IntersectionMode mode = IntersectionMode::Weak);
Rational objective_chain(const CandidateSet& w, IntersectionMode mode = IntersectionMode::Weak);

/// |S1 ∩ S2 ∩ S3| / n. Throws TooShort for n < 3.
Rational objective_sequence(std::span<const BigInt> a, IntersectionMode mode = IntersectionMode::Weak);

/// Dispatches on kind; a Sequence candidate is the first row of `v`.
Rational evaluate_any(const Objective& objective, const CandidateSet& v,
                      IntersectionMode mode = IntersectionMode::Weak);

}  // namespace liouville
