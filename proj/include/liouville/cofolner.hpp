#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "liouville/action.hpp"
#include "liouville/candidate_set.hpp"

namespace liouville {

/// Multipliers r_1..r_d for a support of d+1 points. All entries >= 1.
struct Multipliers {
  std::vector<std::int64_t> r;

  static Multipliers ones(std::size_t d) { return {std::vector<std::int64_t>(d, 1)}; }
  std::int64_t sum() const;
};

/// All consecutive sums r_i + ... + r_j, deduplicated and sorted, with 1
/// removed.
std::vector<std::int64_t> consecutive_sums(const Multipliers& r);

/// {∏ g^e_g : 0 <= e_g < L} over distinct generators g >= 2, as a sorted set.
/// Multiplication by any generator moves at most a 1/L fraction of it out of
/// itself.
class MultiplicativeBox {
 public:
  const std::vector<std::int64_t>& generators() const noexcept { return generators_; }
  std::uint64_t side() const noexcept { return side_; }
  const std::vector<BigInt>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const BigInt& max() const { return elements_.back(); }
  bool contains(const BigInt& v) const;

  /// |g·A ∩ A| / |A|.
  Rational invariance(std::int64_t g) const;

 private:
  friend MultiplicativeBox build_box(std::span<const std::int64_t> factors, std::uint64_t side);
  std::vector<std::int64_t> generators_;
  std::uint64_t side_ = 1;
  std::vector<BigInt> elements_;
};

/// Factors equal to 1 are dropped; duplicates are merged. Throws
/// InvalidArgument for side 0 or a factor below 1.
MultiplicativeBox build_box(std::span<const std::int64_t> factors, std::uint64_t side);

/// {(r_1 a, ..., r_d a) : a in A}, in the box's element order.
CandidateSet build_w(const Multipliers& r, const MultiplicativeBox& box);

/// One element per row w sending support_1 to 0 and support_j to
/// w_1 + ... + w_(j-1); every image is checked by application. Throws
/// DimensionMismatch when |support| != dim + 1.
std::vector<PLMap> lift_to_group(const CandidateSet& w, const PointSet& support,
                                 unsigned workers = 1);

/// {T^k ∘ e : e in E, k = 1..N} for the unit translation T; rows in input
/// order, k ascending within a row.
std::vector<PLMap> shift_average(std::span<const PLMap> elements, std::uint64_t N);

struct BuildParams {
  std::optional<std::uint64_t> L;  // box side; default 2
  std::optional<std::uint64_t> N;  // shift count; default from default_shift_count
  std::optional<std::vector<std::int64_t>> r;
  bool auto_escalate = true;
  int max_steps = 6;
  std::uint64_t max_elements = 4'000'000;
  bool into_f = false;  // re-express the result inside Thompson's group F
  Semantics semantics = Semantics::Multiset;
  unsigned workers = 1;
};

/// ⌈4·extent/ε⌉ (at least 1), where extent bounds every coordinate produced
/// by the lift: max(A)·Σr for pairs, the scaled support width for singletons.
std::uint64_t default_shift_count(const BigInt& extent, const Rational& epsilon);

/// Co-Følner set for the action on n-subsets (n = 1 or 2) of `support`.
///
/// The family F is every n-subset of the support. E is built by moving the
/// support to the naturals (translation and a power-of-two scaling on the
/// right), lifting W = {(r_1 a, ..., r_d a) : a in A} through strong
/// transitivity (pairs only; singletons use the identity), and averaging over
/// N unit translates. If the result misses ε and escalation is on, L doubles
/// and N becomes max(2N, default for the new L) until verification succeeds,
/// max_steps runs out, or |E| would exceed max_elements; the best certificate
/// found is returned either way, with the outcome in pipeline->status.
CoFolnerCertificate build_cofolner(const PointSet& support, int n, const Rational& epsilon,
                                   const BuildParams& params = {});

}  // namespace liouville
