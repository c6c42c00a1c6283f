#include "liouville/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

#include "liouville/error.hpp"
#include "liouville/parallel.hpp"

namespace liouville {

namespace {

constexpr auto kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return b > kSaturated - a ? kSaturated : a + b; }

// C(n + j - 1, j), saturating.
std::uint64_t multichoose(std::uint64_t n, std::uint64_t j) {
  BigInt c = 1;
  for (std::uint64_t i = 1; i <= j; ++i) {
    c *= static_cast<unsigned long>(n + i - 1);
    c /= static_cast<unsigned long>(i);
  }
  return c.fits_ulong_p() ? c.get_ui() : kSaturated;
}

void check_bounds(const Objective& objective, std::uint64_t B, std::uint64_t k) {
  if (B < 1) throw Error(Errc::InvalidArgument, "B must be at least 1");
  if (objective.kind() == ObjectiveKind::Sequence) {
    if (k < 3) throw Error(Errc::TooShort, "sequence search needs k >= 3");
  } else if (k < 1) {
    throw Error(Errc::InvalidArgument, "k must be at least 1");
  }
}

std::vector<Row> row_universe(std::size_t d, std::uint64_t B, RowSpace space) {
  std::vector<Row> rows;
  if (space == RowSpace::Diagonal) {
    for (std::uint64_t a = 1; a <= B; ++a) rows.emplace_back(d, BigInt(static_cast<unsigned long>(a)));
    return rows;
  }
  Row row(d, BigInt(1));
  while (true) {
    rows.push_back(row);
    std::size_t pos = d;
    while (pos > 0 && row[pos - 1] == static_cast<unsigned long>(B)) row[--pos] = 1;
    if (pos == 0) break;
    row[pos - 1] += 1;
  }
  return rows;
}

// Best of one prefix class; enumeration runs in lexicographic order, so the
// first maximum seen is the lexicographically smallest.
struct Best {
  Rational ratio = -1;
  CandidateSet set;
  std::uint64_t evaluated = 0;

  void offer(const Rational& q, const std::function<CandidateSet()>& make) {
    ++evaluated;
    if (q > ratio) {
      ratio = q;
      set = make();
    }
  }
};

Best search_rows_class(const Objective& objective, const std::vector<Row>& universe,
                       std::uint64_t k, std::size_t first, IntersectionMode mode) {
  Best best;
  std::vector<std::size_t> idx{first};
  auto current = [&] {
    std::vector<Row> rows;
    rows.reserve(idx.size());
    for (auto i : idx) rows.push_back(universe[i]);
    return CandidateSet(objective.dimension(), std::move(rows));
  };
  // Depth-first over non-decreasing index sequences starting at `first`.
  while (!idx.empty()) {
    const auto v = current();
    best.offer(evaluate(objective, v, mode), [&] { return v; });
    if (idx.size() < k) {
      idx.push_back(idx.back());
      continue;
    }
    while (!idx.empty()) {
      if (idx.size() > 1 && idx.back() + 1 < universe.size()) {
        ++idx.back();
        break;
      }
      idx.pop_back();
    }
  }
  return best;
}

Best search_sequence_class(std::uint64_t B, std::uint64_t k, std::uint64_t first,
                           IntersectionMode mode) {
  Best best;
  std::vector<BigInt> seq{BigInt(static_cast<unsigned long>(first))};
  while (!seq.empty()) {
    if (seq.size() >= 3) {
      const Rational q = objective_sequence(seq, mode);
      best.offer(q, [&] { return CandidateSet(seq.size(), {seq}); });
    }
    if (seq.size() < k) {
      seq.emplace_back(1);
      continue;
    }
    while (!seq.empty()) {
      if (seq.size() > 1 && seq.back() < static_cast<unsigned long>(B)) {
        seq.back() += 1;
        break;
      }
      seq.pop_back();
    }
  }
  return best;
}

bool lex_less(const CandidateSet& a, const CandidateSet& b) { return a.rows() < b.rows(); }

}  // namespace

std::string to_string(SearchMethod m) { return m == SearchMethod::Exhaustive ? "exhaustive" : "anneal"; }

std::uint64_t enumeration_size(const Objective& objective, std::uint64_t B, std::uint64_t k,
                               RowSpace rows) {
  std::uint64_t total = 0;
  if (objective.kind() == ObjectiveKind::Sequence) {
    std::uint64_t p = sat_mul(sat_mul(B, B), B);
    for (std::uint64_t n = 3; n <= k; ++n, p = sat_mul(p, B)) total = sat_add(total, p);
    return total;
  }
  std::uint64_t u = B;
  if (rows == RowSpace::Full) {
    u = 1;
    for (std::size_t i = 0; i < objective.dimension(); ++i) u = sat_mul(u, B);
  }
  for (std::uint64_t j = 1; j <= k; ++j) total = sat_add(total, multichoose(u, j));
  return total;
}

SearchResult exhaustive_search(const Objective& objective, std::uint64_t B, std::uint64_t k,
                               const ExhaustiveOptions& options) {
  check_bounds(objective, B, k);
  const auto size = enumeration_size(objective, B, k, options.rows);
  if (size > options.budget) {
    throw Error(Errc::BudgetExceeded, "enumeration of " + std::to_string(size) +
                                          " candidates exceeds the budget of " +
                                          std::to_string(options.budget));
  }
  const bool sequence = objective.kind() == ObjectiveKind::Sequence;
  const auto universe = sequence ? std::vector<Row>{} : row_universe(objective.dimension(), B, options.rows);
  const std::size_t classes = sequence ? B : universe.size();

  std::vector<Best> per_class(classes);
  parallel_for(classes, options.workers, [&](std::size_t c) {
    per_class[c] = sequence ? search_sequence_class(B, k, c + 1, options.mode)
                            : search_rows_class(objective, universe, k, c, options.mode);
  });

  SearchResult out;
  out.objective = objective.id();
  out.bounds = {B, k, objective.dimension()};
  out.method = SearchMethod::Exhaustive;
  out.rows = options.rows;
  out.mode = options.mode;
  const Best* best = nullptr;
  for (const auto& b : per_class) {
    out.evaluated += b.evaluated;
    if (!best || b.ratio > best->ratio || (b.ratio == best->ratio && lex_less(b.set, best->set))) {
      best = &b;
    }
  }
  out.best_ratio = best->ratio;
  out.best_set = best->set;
  if (evaluate_any(objective, out.best_set, options.mode) != out.best_ratio) {
    throw std::logic_error("exhaustive witness failed re-evaluation");
  }
  return out;
}

namespace {

struct Chain {
  Rational ratio;
  CandidateSet set;
};

class Annealer {
 public:
  Annealer(const Objective& objective, std::uint64_t B, std::uint64_t k, const AnnealOptions& o,
           unsigned chain)
      : objective_(objective), B_(B), k_(k), opt_(o) {
    std::seed_seq seq{static_cast<std::uint32_t>(o.seed), static_cast<std::uint32_t>(o.seed >> 32U),
                      static_cast<std::uint32_t>(chain)};
    rng_.seed(seq);
  }

  Chain run() {
    auto state = initial();
    Rational value = score(state);
    Chain best{value, to_set(state)};
    for (std::uint64_t t = 0; t < opt_.steps; ++t) {
      const double frac = opt_.steps > 1 ? static_cast<double>(t) / static_cast<double>(opt_.steps - 1) : 0.0;
      const double temp = opt_.t_start * std::pow(opt_.t_end / opt_.t_start, frac);
      auto next = propose(state);
      const Rational q = score(next);
      const double delta = Rational(q - value).get_d();
      if (delta >= 0 || unit_(rng_) < std::exp(delta / temp)) {
        state = std::move(next);
        value = q;
        if (value > best.ratio) best = {value, to_set(state)};
      }
    }
    return best;
  }

 private:
  using State = std::vector<Row>;  // rows, or a single sequence row

  bool sequence() const { return objective_.kind() == ObjectiveKind::Sequence; }

  BigInt coord() {
    return BigInt(static_cast<unsigned long>(std::uniform_int_distribution<std::uint64_t>(1, B_)(rng_)));
  }

  Row random_row() {
    if (opt_.rows == RowSpace::Diagonal) return Row(objective_.dimension(), coord());
    Row r;
    for (std::size_t i = 0; i < objective_.dimension(); ++i) r.push_back(coord());
    return r;
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  State initial() {
    if (sequence()) {
      const auto n = std::uniform_int_distribution<std::uint64_t>(3, k_)(rng_);
      Row seq;
      for (std::uint64_t i = 0; i < n; ++i) seq.push_back(coord());
      return {seq};
    }
    const auto n = std::uniform_int_distribution<std::uint64_t>(1, k_)(rng_);
    State s;
    for (std::uint64_t i = 0; i < n; ++i) s.push_back(random_row());
    return s;
  }

  State propose(const State& s) {
    State next = s;
    if (sequence()) {
      auto& seq = next.front();
      std::vector<int> moves{0};
      if (seq.size() < k_) moves.push_back(1);
      if (seq.size() > 3) moves.push_back(2);
      switch (moves[pick(moves.size())]) {
        case 0: seq[pick(seq.size())] = coord(); break;
        case 1: seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(pick(seq.size() + 1)), coord()); break;
        default: seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(pick(seq.size()))); break;
      }
      return next;
    }
    std::vector<int> moves{0};
    if (next.size() < k_) moves.push_back(1);
    if (next.size() > 1) moves.push_back(2);
    switch (moves[pick(moves.size())]) {
      case 0: {
        auto& row = next[pick(next.size())];
        if (opt_.rows == RowSpace::Diagonal) {
          row = random_row();
        } else {
          row[pick(row.size())] = coord();
        }
        break;
      }
      case 1: next.push_back(random_row()); break;
      default: next.erase(next.begin() + static_cast<std::ptrdiff_t>(pick(next.size()))); break;
    }
    return next;
  }

  CandidateSet to_set(const State& s) const {
    if (sequence()) return CandidateSet(s.front().size(), s);
    State sorted = s;
    std::sort(sorted.begin(), sorted.end());
    return CandidateSet(objective_.dimension(), std::move(sorted));
  }

  Rational score(const State& s) const { return evaluate_any(objective_, to_set(s), opt_.mode); }

  const Objective& objective_;
  std::uint64_t B_;
  std::uint64_t k_;
  const AnnealOptions& opt_;
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

}  // namespace

SearchResult anneal_search(const Objective& objective, std::uint64_t B, std::uint64_t k,
                           const AnnealOptions& options) {
  check_bounds(objective, B, k);
  if (options.t_start <= 0 || options.t_end <= 0) {
    throw Error(Errc::InvalidArgument, "temperatures must be positive");
  }
  const unsigned chains = std::max(1U, options.chains);
  std::vector<Chain> results(chains);
  parallel_for(chains, options.workers, [&](std::size_t c) {
    results[c] = Annealer(objective, B, k, options, static_cast<unsigned>(c)).run();
  });
  std::size_t winner = 0;
  for (std::size_t c = 1; c < results.size(); ++c) {
    if (results[c].ratio > results[winner].ratio) winner = c;
  }
  SearchResult out;
  out.objective = objective.id();
  out.bounds = {B, k, objective.dimension()};
  out.method = SearchMethod::Anneal;
  out.seed = options.seed;
  out.rows = options.rows;
  out.mode = options.mode;
  out.evaluated = chains * (options.steps + 1);
  out.best_set = std::move(results[winner].set);
  out.best_ratio = evaluate_any(objective, out.best_set, options.mode);
  if (out.best_ratio != results[winner].ratio) {
    throw std::logic_error("anneal witness failed re-evaluation");
  }
  return out;
}

}  // namespace liouville
