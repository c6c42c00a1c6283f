#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "liouville/candidate_set.hpp"
#include "liouville/dyadic.hpp"
#include "liouville/plmap.hpp"
#include "liouville/point_set.hpp"
#include "liouville/rational.hpp"

namespace liouville::testing {

using Rng = std::mt19937_64;

inline BigInt random_bigint(Rng& rng, int bits) {
  BigInt v = 0;
  for (int done = 0; done < bits; done += 32) {
    v <<= 32;
    v += static_cast<unsigned long>(rng() & 0xffffffffULL);
  }
  if (bits % 32 != 0) v >>= (32 - bits % 32);
  return v;
}

inline Dyadic random_dyadic(Rng& rng, int max_bits = 64, std::uint64_t max_exp = 32) {
  std::uniform_int_distribution<int> bits(1, max_bits);
  std::uniform_int_distribution<std::uint64_t> exp(0, max_exp);
  BigInt num = random_bigint(rng, bits(rng));
  if (rng() & 1) num = -num;
  return Dyadic::normalize(num, exp(rng));
}

// A PL map described by raw (possibly redundant) anchors, kept next to the
// library object so it can be evaluated independently.
struct RawMap {
  std::vector<std::pair<Rational, Rational>> anchors;
  std::int64_t left_exp = 0;
  std::int64_t right_exp = 0;
  PLMap map = PLMap::identity();
};

inline Rational pow2(std::int64_t e) {
  Rational r = 1;
  if (e >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  r.canonicalize();
  return r;
}

inline Rational naive_apply(const RawMap& f, const Rational& x) {
  const auto& a = f.anchors;
  if (x <= a.front().first) return a.front().second + (x - a.front().first) * pow2(f.left_exp);
  if (x >= a.back().first) return a.back().second + (x - a.back().first) * pow2(f.right_exp);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (x <= a[i + 1].first) {
      const Rational t = (x - a[i].first) / (a[i + 1].first - a[i].first);
      return a[i].second + t * (a[i + 1].second - a[i].second);
    }
  }
  return a.back().second;
}

inline RawMap random_map(Rng& rng, int max_anchors = 12, int max_bits = 64,
                         std::uint64_t max_exp = 32, int max_slope = 8) {
  std::uniform_int_distribution<int> count(1, max_anchors);
  std::uniform_int_distribution<int> slope(-max_slope, max_slope);
  const int n = count(rng);
  std::vector<Dyadic> xs;
  while (static_cast<int>(xs.size()) < n) {
    auto x = random_dyadic(rng, max_bits, max_exp);
    if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  std::vector<Anchor> anchors;
  Dyadic y = random_dyadic(rng, max_bits, max_exp);
  for (int i = 0; i < n; ++i) {
    if (i > 0) y = y + (xs[i] - xs[i - 1]).mul_pow2(slope(rng));
    anchors.push_back({xs[i], y});
  }
  RawMap raw;
  raw.left_exp = slope(rng);
  raw.right_exp = slope(rng);
  for (const auto& a : anchors) raw.anchors.emplace_back(a.x.to_rational(), a.y.to_rational());
  raw.map = PLMap::make(anchors, raw.left_exp, raw.right_exp);
  return raw;
}

inline bool canonical(const Dyadic& d) {
  if (d.is_zero()) return d.exp() == 0;
  return d.exp() == 0 || mpz_odd_p(d.num().get_mpz_t()) != 0;
}

inline PointSet random_point_set(Rng& rng, std::size_t n, bool unit_interval) {
  std::vector<Dyadic> pts;
  while (pts.size() < n) {
    Dyadic p;
    if (unit_interval) {
      std::uniform_int_distribution<std::uint64_t> e(1, 12);
      const auto exp = e(rng);
      std::uniform_int_distribution<std::uint64_t> m(1, (1ULL << exp) - 1);
      p = Dyadic::normalize(BigInt(static_cast<unsigned long>(m(rng))), exp);
    } else {
      p = random_dyadic(rng, 24, 10);
    }
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return PointSet(pts);
}

// Naive multiset intersection of keys given as int64 vectors: sort each list,
// then count each distinct key of the first list in every other list.
using NaiveKey = std::vector<std::int64_t>;

inline std::uint64_t naive_intersection(std::vector<std::vector<NaiveKey>> lists) {
  std::vector<NaiveKey> distinct = lists.front();
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::uint64_t total = 0;
  for (const auto& key : distinct) {
    std::uint64_t m = UINT64_MAX;
    for (const auto& l : lists) {
      std::uint64_t c = 0;
      for (const auto& k : l) c += k == key ? 1 : 0;
      m = std::min(m, c);
    }
    total += m;
  }
  return total;
}

inline std::int64_t sum(const std::vector<std::int64_t>& row, std::size_t from, std::size_t to) {
  std::int64_t s = 0;
  for (std::size_t i = from; i <= to; ++i) s += row[i];
  return s;
}

// Problem-style objectives written out directly in 1-based index notation.
inline Rational naive_pair3(const std::vector<std::vector<std::int64_t>>& v) {
  std::vector<std::vector<NaiveKey>> lists(4);
  for (const auto& x : v) {
    lists[0].push_back({x[0], x[1]});
    lists[1].push_back({x[1], x[2]});
    lists[2].push_back({x[0] + x[1], x[2]});
    lists[3].push_back({x[0], x[1] + x[2]});
  }
  return make_rational(static_cast<long>(naive_intersection(lists)), static_cast<long>(v.size()));
}

inline Rational naive_general(std::size_t n, const std::vector<std::vector<std::int64_t>>& v) {
  std::vector<std::vector<NaiveKey>> lists;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 1; i <= k; ++i) {
      for (std::size_t m = k + 1; m <= n; ++m) {
        std::vector<NaiveKey> l;
        for (const auto& x : v) l.push_back({sum(x, i - 1, k - 1), sum(x, k, m - 1)});
        lists.push_back(l);
      }
    }
  }
  return make_rational(static_cast<long>(naive_intersection(lists)), static_cast<long>(v.size()));
}

inline Rational naive_chain(std::size_t d, const std::vector<std::vector<std::int64_t>>& w) {
  std::vector<std::vector<NaiveKey>> lists;
  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t j = i; j <= d; ++j) {
      std::vector<NaiveKey> l;
      for (const auto& x : w) l.push_back({sum(x, i - 1, j - 1)});
      lists.push_back(l);
    }
  }
  return make_rational(static_cast<long>(naive_intersection(lists)), static_cast<long>(w.size()));
}

inline Rational naive_sequence(const std::vector<std::int64_t>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<NaiveKey>> lists(3);
  for (std::size_t i = 1; i <= n - 1; ++i) lists[0].push_back({a[i - 1], a[i]});
  for (std::size_t j = 1; j <= n - 2; ++j) {
    lists[1].push_back({a[j - 1] + a[j], a[j + 1]});
    lists[2].push_back({a[j - 1], a[j] + a[j + 1]});
  }
  return make_rational(static_cast<long>(naive_intersection(lists)), static_cast<long>(n));
}

inline CandidateSet to_candidate_set(std::size_t dim, const std::vector<std::vector<std::int64_t>>& v) {
  std::vector<Row> rows;
  for (const auto& x : v) {
    Row r;
    for (auto c : x) r.push_back(BigInt(static_cast<long>(c)));
    rows.push_back(r);
  }
  return CandidateSet(dim, rows);
}

// Exact k-step law of the lazy walk 1/2 δ0 + 1/4 δ(+1) + 1/4 δ(-1) on the
// integers, by integer convolution; entry j is the mass at start + j - k.
inline std::vector<Rational> lazy_walk_law(std::uint64_t k) {
  std::vector<BigInt> w{1};
  for (std::uint64_t s = 0; s < k; ++s) {
    std::vector<BigInt> next(w.size() + 2, 0);
    for (std::size_t j = 0; j < w.size(); ++j) {
      next[j] += w[j];
      next[j + 1] += 2 * w[j];
      next[j + 2] += w[j];
    }
    w = std::move(next);
  }
  BigInt total = 1;
  mpz_mul_2exp(total.get_mpz_t(), total.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * k));
  std::vector<Rational> out;
  for (const auto& c : w) out.push_back(make_rational(c, total));
  return out;
}

}  // namespace liouville::testing
