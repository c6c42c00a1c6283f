#include "liouville/objectives.hpp"

#include <algorithm>

#include "liouville/error.hpp"

namespace liouville {

namespace {

Term pair_term(CoordRange a, CoordRange b) { return Term{{a, b}}; }

BigInt range_sum(const Row& row, CoordRange r) {
  BigInt s = 0;
  for (auto i = r.first; i < r.second; ++i) s += row[i];
  return s;
}

Key key_of(const Term& t, const Row& row) {
  Key k;
  k.reserve(t.components.size());
  for (const auto& c : t.components) k.push_back(range_sum(row, c));
  return k;
}

// Size of the key-wise minimum intersection of sorted key lists.
std::uint64_t intersection_size(std::vector<std::vector<Key>>& lists) {
  for (auto& l : lists) std::sort(l.begin(), l.end());
  std::uint64_t total = 0;
  const auto& first = lists.front();
  for (std::size_t i = 0; i < first.size();) {
    std::size_t j = i;
    while (j < first.size() && first[j] == first[i]) ++j;
    auto m = static_cast<std::uint64_t>(j - i);
    for (std::size_t t = 1; t < lists.size() && m > 0; ++t) {
      const auto [lo, hi] = std::equal_range(lists[t].begin(), lists[t].end(), first[i]);
      m = std::min<std::uint64_t>(m, static_cast<std::uint64_t>(hi - lo));
    }
    total += m;
    i = j;
  }
  return total;
}

std::uint64_t matched_rows(const std::vector<std::vector<Key>>& lists) {
  std::uint64_t total = 0;
  for (std::size_t x = 0; x < lists.front().size(); ++x) {
    bool same = true;
    for (std::size_t t = 1; t < lists.size() && same; ++t) same = lists[t][x] == lists[0][x];
    total += same ? 1 : 0;
  }
  return total;
}

Rational ratio(std::uint64_t num, std::uint64_t den) {
  return make_rational(BigInt(static_cast<unsigned long>(num)), BigInt(static_cast<unsigned long>(den)));
}

Rational score(std::vector<std::vector<Key>>& lists, std::uint64_t den, IntersectionMode mode) {
  const auto hits = mode == IntersectionMode::Weak ? intersection_size(lists) : matched_rows(lists);
  return ratio(hits, den);
}

}  // namespace

Objective Objective::pair3() {
  Objective o;
  o.kind_ = ObjectiveKind::Pair3;
  o.dim_ = 3;
  o.terms_ = {pair_term({0, 1}, {1, 2}), pair_term({1, 2}, {2, 3}), pair_term({0, 2}, {2, 3}),
              pair_term({0, 1}, {1, 3})};
  return o;
}

Objective Objective::general(std::size_t n) {
  if (n < 2) throw Error(Errc::BadDimension, "general objective needs n >= 2");
  Objective o;
  o.kind_ = ObjectiveKind::General;
  o.dim_ = n;
  // 1-based i <= k < m  ->  ranges [i-1, k) and [k, m).
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 1; i <= k; ++i) {
      for (std::size_t m = k + 1; m <= n; ++m) o.terms_.push_back(pair_term({i - 1, k}, {k, m}));
    }
  }
  return o;
}

Objective Objective::chain(std::size_t d) {
  if (d < 1) throw Error(Errc::BadDimension, "chain objective needs d >= 1");
  Objective o;
  o.kind_ = ObjectiveKind::Chain;
  o.dim_ = d;
  for (std::size_t len = 1; len <= d; ++len) {
    for (std::size_t i = 0; i + len <= d; ++i) o.terms_.push_back(Term{{{i, i + len}}});
  }
  return o;
}

Objective Objective::sequence() {
  Objective o;
  o.kind_ = ObjectiveKind::Sequence;
  return o;
}

std::string Objective::id() const {
  switch (kind_) {
    case ObjectiveKind::Pair3: return "pair3";
    case ObjectiveKind::General: return "general(" + std::to_string(dim_) + ")";
    case ObjectiveKind::Chain: return "chain(" + std::to_string(dim_) + ")";
    case ObjectiveKind::Sequence: return "sequence";
  }
  return "unknown";
}

Objective Objective::parse(std::string_view name, std::size_t dim) {
  if (name == "pair3") return pair3();
  if (name == "general") return general(dim);
  if (name == "chain") return chain(dim);
  if (name == "sequence") return sequence();
  const auto open = name.find('(');
  if (open != std::string_view::npos && name.back() == ')') {
    const auto inner = parse_rational(name.substr(open + 1, name.size() - open - 2));
    if (inner.get_den() != 1 || inner < 1) throw Error(Errc::Parse, "bad objective dimension");
    return parse(name.substr(0, open), inner.get_num().get_ui());
  }
  throw Error(Errc::Parse, "unknown objective '" + std::string(name) + "'");
}

Multiset<Key> multiset_intersect(std::span<const Multiset<Key>> ms) {
  if (ms.empty()) throw Error(Errc::InvalidArgument, "intersection of an empty list");
  return intersect(ms);
}

Multiset<Key> term_multiset(const Term& term, const CandidateSet& v) {
  Multiset<Key> out;
  for (const auto& row : v.rows()) out.insert(key_of(term, row));
  return out;
}

Rational evaluate(const Objective& objective, const CandidateSet& v, IntersectionMode mode) {
  if (objective.kind() == ObjectiveKind::Sequence) {
    throw Error(Errc::InvalidArgument, "sequence objective takes a single sequence");
  }
  if (v.empty()) throw Error(Errc::InvalidArgument, "candidate set is empty");
  if (v.dim() != objective.dimension()) {
    throw Error(Errc::BadDimension, objective.id() + " needs rows of dimension " +
                                        std::to_string(objective.dimension()) + ", got " +
                                        std::to_string(v.dim()));
  }
  std::vector<std::vector<Key>> lists;
  lists.reserve(objective.terms().size());
  for (const auto& t : objective.terms()) {
    std::vector<Key> keys;
    keys.reserve(v.size());
    for (const auto& row : v.rows()) keys.push_back(key_of(t, row));
    lists.push_back(std::move(keys));
  }
  return score(lists, v.size(), mode);
}

Rational objective_pair3(const CandidateSet& v, IntersectionMode mode) {
  return evaluate(Objective::pair3(), v, mode);
}

Rational objective_general(std::size_t n, const CandidateSet& v, IntersectionMode mode) {
  return evaluate(Objective::general(n), v, mode);
}

Rational objective_chain(const CandidateSet& w, IntersectionMode mode) {
  if (w.dim() < 1) throw Error(Errc::BadDimension, "chain objective needs d >= 1");
  return evaluate(Objective::chain(w.dim()), w, mode);
}

Rational objective_sequence(std::span<const BigInt> a, IntersectionMode mode) {
  const std::size_t n = a.size();
  if (n < 3) throw Error(Errc::TooShort, "sequence objective needs n >= 3, got " + std::to_string(n));
  std::vector<std::vector<Key>> lists(3);
  for (std::size_t i = 0; i + 1 < n; ++i) lists[0].push_back({a[i], a[i + 1]});
  for (std::size_t j = 0; j + 2 < n; ++j) {
    lists[1].push_back({a[j] + a[j + 1], a[j + 2]});
    lists[2].push_back({a[j], a[j + 1] + a[j + 2]});
  }
  if (mode == IntersectionMode::MatchedRows) {
    // Position j contributes when all three keys anchored at j coincide.
    lists[0].pop_back();
  }
  return score(lists, n, mode);
}

Rational evaluate_any(const Objective& objective, const CandidateSet& v, IntersectionMode mode) {
  if (objective.kind() != ObjectiveKind::Sequence) return evaluate(objective, v, mode);
  if (v.size() != 1) throw Error(Errc::InvalidArgument, "a sequence candidate is a single row");
  return objective_sequence(v[0], mode);
}

}  // namespace liouville
