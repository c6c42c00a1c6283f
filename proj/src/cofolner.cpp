#include "liouville/cofolner.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "liouville/error.hpp"
#include "liouville/parallel.hpp"

namespace liouville {

std::int64_t Multipliers::sum() const { return std::accumulate(r.begin(), r.end(), std::int64_t{0}); }

std::vector<std::int64_t> consecutive_sums(const Multipliers& r) {
  std::vector<std::int64_t> sums;
  for (std::size_t i = 0; i < r.r.size(); ++i) {
    std::int64_t s = 0;
    for (std::size_t j = i; j < r.r.size(); ++j) {
      s += r.r[j];
      if (s > 1) sums.push_back(s);
    }
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return sums;
}

bool MultiplicativeBox::contains(const BigInt& v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

Rational MultiplicativeBox::invariance(std::int64_t g) const {
  std::size_t hits = 0;
  for (const auto& a : elements_) hits += contains(a * g) ? 1 : 0;
  return make_rational(BigInt(static_cast<unsigned long>(hits)),
                       BigInt(static_cast<unsigned long>(elements_.size())));
}

MultiplicativeBox build_box(std::span<const std::int64_t> factors, std::uint64_t side) {
  if (side == 0) throw Error(Errc::InvalidArgument, "box side L must be at least 1");
  MultiplicativeBox box;
  box.side_ = side;
  for (auto f : factors) {
    if (f < 1) throw Error(Errc::InvalidArgument, "box factor " + std::to_string(f) + " below 1");
    if (f > 1) box.generators_.push_back(f);
  }
  std::sort(box.generators_.begin(), box.generators_.end());
  box.generators_.erase(std::unique(box.generators_.begin(), box.generators_.end()),
                        box.generators_.end());
  box.elements_ = {BigInt(1)};
  for (auto g : box.generators_) {
    std::vector<BigInt> next;
    next.reserve(box.elements_.size() * side);
    for (const auto& a : box.elements_) {
      BigInt v = a;
      for (std::uint64_t e = 0; e < side; ++e, v *= g) next.push_back(v);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    box.elements_ = std::move(next);
  }
  return box;
}

CandidateSet build_w(const Multipliers& r, const MultiplicativeBox& box) {
  std::vector<Row> rows;
  rows.reserve(box.size());
  for (const auto& a : box.elements()) {
    Row row;
    row.reserve(r.r.size());
    for (auto ri : r.r) row.push_back(a * ri);
    rows.push_back(std::move(row));
  }
  return CandidateSet(r.r.size(), std::move(rows));
}

std::vector<PLMap> lift_to_group(const CandidateSet& w, const PointSet& support, unsigned workers) {
  if (support.size() != w.dim() + 1) {
    throw Error(Errc::DimensionMismatch, "support of " + std::to_string(support.size()) +
                                             " points for rows of dimension " +
                                             std::to_string(w.dim()));
  }
  std::vector<std::optional<PLMap>> lifted(w.size());
  parallel_for(w.size(), workers, [&](std::size_t i) {
    std::vector<Dyadic> target;
    target.reserve(support.size());
    BigInt partial = 0;
    target.emplace_back(partial);
    for (const auto& v : w[i]) {
      partial += v;
      target.emplace_back(partial);
    }
    const auto dst = PointSet::from_sorted(std::move(target));
    auto g = transitivity_witness(support, dst, WitnessMode::FR);
    for (std::size_t j = 0; j < support.size(); ++j) {
      if (g.apply(support[j]) != dst[j]) throw std::logic_error("lifted element misses its target");
    }
    lifted[i] = std::move(g);
  });
  std::vector<PLMap> out;
  out.reserve(lifted.size());
  for (auto& g : lifted) out.push_back(std::move(*g));
  return out;
}

std::vector<PLMap> shift_average(std::span<const PLMap> elements, std::uint64_t N) {
  std::vector<PLMap> out;
  out.reserve(elements.size() * N);
  for (const auto& e : elements) {
    for (std::uint64_t k = 1; k <= N; ++k) {
      out.push_back(e.shifted(Dyadic(BigInt(static_cast<unsigned long>(k)))));
    }
  }
  return out;
}

std::uint64_t default_shift_count(const BigInt& extent, const Rational& epsilon) {
  if (sgn(epsilon) <= 0) throw Error(Errc::InvalidArgument, "epsilon must be positive");
  const Rational bound = Rational(extent * 4) / epsilon;
  BigInt n;
  mpz_cdiv_q(n.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  if (n < 1) n = 1;
  if (!n.fits_ulong_p()) throw Error(Errc::BudgetExceeded, "default N does not fit in 64 bits");
  return n.get_ui();
}

namespace {

// Right factor h moving the support onto natural numbers.
struct Placement {
  PLMap h = PLMap::identity();
  std::int64_t i_scale = 0;
  PointSet naturals;
};

Placement place_on_naturals(const PointSet& support, bool integer_tails) {
  Placement p;
  const Dyadic shift = (integer_tails || support[0].sign() < 0) ? -support[0] : Dyadic(0);
  std::vector<Dyadic> moved;
  for (const auto& x : support) moved.push_back(x + shift);
  const std::vector<PointSet> family{PointSet::from_sorted(std::move(moved))};
  auto scaled = scale_to_naturals(family);
  p.i_scale = scaled.i;
  p.naturals = std::move(scaled.family.front());
  if (!integer_tails) {
    p.h = compose(PLMap::scale_pow2(p.i_scale), PLMap::translation(shift));
    return p;
  }
  // Pad with one integer on each side so that both tails are integer
  // translations; required before conjugating into F.
  std::vector<Dyadic> src{Dyadic(support[0].floor() - 1)};
  std::vector<Dyadic> dst{Dyadic(-1)};
  for (std::size_t j = 0; j < support.size(); ++j) {
    src.push_back(support[j]);
    dst.push_back(p.naturals[j]);
  }
  src.emplace_back(support[support.size() - 1].ceil() + 1);
  dst.push_back(p.naturals[p.naturals.size() - 1] + Dyadic(1));
  p.h = transitivity_witness(PointSet::from_sorted(std::move(src)),
                             PointSet::from_sorted(std::move(dst)), WitnessMode::FR);
  return p;
}

struct Stage {
  std::vector<PLMap> base;  // lifted elements with h already applied on the right
  BigInt extent;
};

Stage lift_stage(const Placement& place, int n, const Multipliers& r, std::uint64_t L,
                 unsigned workers) {
  Stage s;
  if (n == 1) {
    s.base = {place.h};
    s.extent = (place.naturals[place.naturals.size() - 1] - place.naturals[0]).num();
    return s;
  }
  const auto box = build_box(consecutive_sums(r), L);
  const auto w = build_w(r, box);
  auto lifted = lift_to_group(w, place.naturals, workers);
  s.base.reserve(lifted.size());
  for (const auto& g : lifted) s.base.push_back(compose(g, place.h));
  s.extent = box.max() * r.sum();
  return s;
}

}  // namespace

CoFolnerCertificate build_cofolner(const PointSet& support, int n, const Rational& epsilon,
                                   const BuildParams& params) {
  if (n != 1 && n != 2) throw Error(Errc::InvalidArgument, "n must be 1 or 2");
  if (sgn(epsilon) <= 0) throw Error(Errc::InvalidArgument, "epsilon must be positive");
  if (support.size() < static_cast<std::size_t>(n)) {
    throw Error(Errc::InvalidArgument, "support has fewer than n points");
  }
  const std::size_t d = support.size() - 1;
  Multipliers r = params.r ? Multipliers{*params.r} : Multipliers::ones(d);
  if (n == 2) {
    if (r.r.size() != d) {
      throw Error(Errc::InvalidArgument, "expected " + std::to_string(d) + " multipliers");
    }
    for (auto v : r.r) {
      if (v < 1) throw Error(Errc::InvalidArgument, "multipliers must be at least 1");
    }
  } else {
    r.r.clear();
  }

  // In F mode the construction runs on the image of the support under
  // unit_to_line and is conjugated back at the end.
  PointSet working = support;
  if (params.into_f) {
    std::vector<Dyadic> pts;
    for (const auto& x : support) pts.push_back(unit_to_line(x));
    working = PointSet::from_sorted(std::move(pts));
  }
  const auto family = subsets_of_size(working, static_cast<std::size_t>(n));
  const auto place = place_on_naturals(working, params.into_f);

  PipelineInfo info;
  info.group = params.into_f ? "F" : "F_R";
  info.i_scale = place.i_scale;
  info.conjugator = place.h;
  info.r = r.r;

  std::uint64_t L = n == 2 ? params.L.value_or(2) : 0;
  if (n == 2 && L == 0) throw Error(Errc::InvalidArgument, "box side L must be at least 1");
  auto stage = lift_stage(place, n, r, L, params.workers);
  std::uint64_t N = params.N.value_or(default_shift_count(stage.extent, epsilon));
  if (N == 0) throw Error(Errc::InvalidArgument, "N must be at least 1");

  std::optional<CoFolnerCertificate> best;
  std::uint64_t best_L = 0;
  std::uint64_t best_N = 0;
  info.status = "unverified";
  for (int step = 0;; ++step) {
    auto cert = verify_cofolner(shift_average(stage.base, N), family, epsilon, params.semantics,
                                params.workers);
    info.history.push_back({L, N, cert.achieved});
    const bool better = !best || cert.achieved < best->achieved;
    if (better) {
      best = std::move(cert);
      best_L = L;
      best_N = N;
    }
    if (best->verified) {
      info.status = "verified";
      break;
    }
    if (!params.auto_escalate) break;
    if (step + 1 >= params.max_steps) {
      info.status = "budget_exceeded";
      break;
    }
    const std::uint64_t next_L = n == 2 ? 2 * L : 0;
    auto next = lift_stage(place, n, r, next_L, params.workers);
    const auto next_N = std::max(2 * N, default_shift_count(next.extent, epsilon));
    if (next.base.size() * next_N > params.max_elements) {
      info.status = "budget_exceeded";
      break;
    }
    L = next_L;
    N = next_N;
    stage = std::move(next);
  }
  info.L = best_L;
  info.N = best_N;

  CoFolnerCertificate out = std::move(*best);
  if (params.into_f) {
    std::vector<PLMap> conjugated;
    conjugated.reserve(out.E.size());
    for (const auto& e : out.E) conjugated.push_back(conjugate_into_unit_interval(e));
    const auto achieved = out.achieved;
    out = verify_cofolner(std::move(conjugated), subsets_of_size(support, static_cast<std::size_t>(n)),
                          epsilon, params.semantics, params.workers);
    if (out.achieved != achieved) throw std::logic_error("conjugation changed the achieved ratio");
  }
  out.pipeline = std::move(info);
  return out;
}

}  // namespace liouville
