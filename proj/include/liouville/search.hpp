#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "liouville/objectives.hpp"

namespace liouville {

enum class SearchMethod { Exhaustive, Anneal };

/// Rows drawn from all of [1..B]^d, or only from the diagonal (a, ..., a).
enum class RowSpace { Full, Diagonal };

struct SearchBounds {
  std::uint64_t B = 1;  // largest coordinate
  std::uint64_t k = 1;  // most rows (sequence: longest length)
  std::size_t d = 0;    // row dimension; 0 for sequences
};

/// Best candidate found, re-evaluated exactly before being returned. A result
/// is a certified maximum only within its bounds and only for the exhaustive
/// method.
struct SearchResult {
  std::string objective;
  SearchBounds bounds;
  Rational best_ratio;
  CandidateSet best_set;
  SearchMethod method = SearchMethod::Exhaustive;
  std::optional<std::uint64_t> seed;
  RowSpace rows = RowSpace::Full;
  IntersectionMode mode = IntersectionMode::Weak;
  std::uint64_t evaluated = 0;
};

struct ExhaustiveOptions {
  RowSpace rows = RowSpace::Full;
  IntersectionMode mode = IntersectionMode::Weak;
  std::uint64_t budget = 5'000'000;  // most candidates that will be enumerated
  unsigned workers = 1;
};

/// Number of candidates exhaustive_search would enumerate, saturating at
/// UINT64_MAX.
std::uint64_t enumeration_size(const Objective& objective, std::uint64_t B, std::uint64_t k,
                               RowSpace rows);

/// Exact maximum over every multiset of 1..k rows (sequences: every sequence
/// of length 3..k) with entries in [1..B]. Ties go to the lexicographically
/// smallest witness. Throws BudgetExceeded instead of truncating.
SearchResult exhaustive_search(const Objective& objective, std::uint64_t B, std::uint64_t k,
                               const ExhaustiveOptions& options = {});

struct AnnealOptions {
  std::uint64_t steps = 10'000;
  double t_start = 0.5;  // geometric temperature schedule t_start -> t_end
  double t_end = 0.005;
  std::uint64_t seed = 1;
  unsigned chains = 1;
  RowSpace rows = RowSpace::Full;
  IntersectionMode mode = IntersectionMode::Weak;
  unsigned workers = 1;
};

/// Simulated annealing over the same candidate space. Moves insert, delete or
/// mutate one row (one entry for sequences). Chain c draws from the stream
/// (seed, c); the best chain wins, ties to the lower index.
SearchResult anneal_search(const Objective& objective, std::uint64_t B, std::uint64_t k,
                           const AnnealOptions& options = {});

std::string to_string(SearchMethod m);

}  // namespace liouville
