#include "liouville/walks.hpp"

#include <algorithm>
#include <random>

#include "liouville/error.hpp"
#include "liouville/parallel.hpp"

namespace liouville {

Rational transition_probability(const ProbMeasure& mu, const PointSet& x, const PointSet& y) {
  Rational p = 0;
  for (const auto& a : mu.atoms()) {
    if (act_set(a.element, x) == y) p += a.weight;
  }
  return p;
}

std::map<PointSet, Rational> one_step_law(const ProbMeasure& mu, const PointSet& x) {
  std::map<PointSet, Rational> law;
  for (const auto& a : mu.atoms()) law[act_set(a.element, x)] += a.weight;
  return law;
}

std::map<PointSet, Rational> exact_law(const ProbMeasure& mu, const PointSet& start, std::uint64_t k) {
  std::map<PointSet, Rational> law{{start, Rational(1)}};
  for (std::uint64_t s = 0; s < k; ++s) {
    std::map<PointSet, Rational> next;
    for (const auto& [x, px] : law) {
      for (const auto& [y, pxy] : one_step_law(mu, x)) next[y] += px * pxy;
    }
    law = std::move(next);
  }
  return law;
}

const Rational& FunctionTable::operator()(const PointSet& x) const {
  const auto it = values.find(x);
  return it == values.end() ? default_value : it->second;
}

Rational harmonicity_residual(const FunctionTable& f, const ProbMeasure& mu, const PointSet& x) {
  Rational mean = 0;
  for (const auto& a : mu.atoms()) mean += a.weight * f(act_set(a.element, x));
  return abs(f(x) - mean);
}

namespace {

// Atom sampler with exact rational weights: draw u uniform on [0, D) where D
// is the common denominator, and take the first atom whose cumulative
// numerator exceeds u.
class AtomSampler {
 public:
  explicit AtomSampler(const ProbMeasure& mu) {
    BigInt den = 1;
    for (const auto& a : mu.atoms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.weight.get_den_mpz_t());
    if (!den.fits_ulong_p()) throw Error(Errc::BadMeasure, "weight denominators too large to sample");
    BigInt acc = 0;
    for (const auto& a : mu.atoms()) {
      acc += a.weight.get_num() * (den / a.weight.get_den());
      cumulative_.push_back(acc.get_ui());
    }
    dist_ = std::uniform_int_distribution<std::uint64_t>(0, den.get_ui() - 1);
  }

  template <typename Rng>
  std::size_t operator()(Rng& rng) const {
    auto dist = dist_;
    const auto u = dist(rng);
    return static_cast<std::size_t>(
        std::upper_bound(cumulative_.begin(), cumulative_.end(), u) - cumulative_.begin());
  }

 private:
  std::vector<std::uint64_t> cumulative_;
  std::uniform_int_distribution<std::uint64_t> dist_;
};

std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32U)};
  return std::mt19937_64(seq);
}

}  // namespace

std::vector<EmpiricalDistribution> simulate_checkpoints(const ProbMeasure& mu,
                                                        const PointSet& start,
                                                        std::span<const std::uint64_t> ks,
                                                        std::uint64_t trials, std::uint64_t seed,
                                                        unsigned workers) {
  if (trials == 0) throw Error(Errc::InvalidArgument, "trials must be at least 1");
  std::vector<std::uint64_t> order(ks.begin(), ks.end());
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  const std::uint64_t last = order.empty() ? 0 : order.back();

  const AtomSampler sample(mu);
  const auto& atoms = mu.atoms();
  // Endpoint of every trial at every checkpoint, merged in a fixed order.
  std::vector<std::vector<PointSet>> endpoints(order.size(), std::vector<PointSet>(trials));
  parallel_for(trials, workers, [&](std::size_t t) {
    auto rng = trial_stream(seed, t);
    PointSet x = start;
    std::size_t next = 0;
    for (std::uint64_t s = 0; s <= last; ++s) {
      while (next < order.size() && order[next] == s) endpoints[next++][t] = x;
      if (s == last) break;
      const auto& g = atoms[sample(rng)].element;
      if (!g.is_identity()) x = act_set(g, x);
    }
  });

  std::vector<EmpiricalDistribution> out;
  out.reserve(ks.size());
  for (auto k : ks) {
    const auto pos = static_cast<std::size_t>(std::lower_bound(order.begin(), order.end(), k) - order.begin());
    EmpiricalDistribution d;
    d.trials = trials;
    d.step = k;
    d.start = start;
    d.seed = seed;
    for (const auto& x : endpoints[pos]) d.counts.insert(x);
    out.push_back(std::move(d));
  }
  return out;
}

EmpiricalDistribution simulate(const ProbMeasure& mu, const PointSet& start, std::uint64_t k,
                               std::uint64_t trials, std::uint64_t seed, unsigned workers) {
  const std::uint64_t ks[] = {k};
  return std::move(simulate_checkpoints(mu, start, ks, trials, seed, workers).front());
}

Rational empirical_tv(const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
  if (a.trials == 0 || b.trials == 0) throw Error(Errc::InvalidArgument, "empty distribution");
  const Rational ta(BigInt(static_cast<unsigned long>(a.trials)));
  const Rational tb(BigInt(static_cast<unsigned long>(b.trials)));
  Rational total = 0;
  auto freq = [](std::uint64_t c, const Rational& t) -> Rational {
    return Rational(BigInt(static_cast<unsigned long>(c))) / t;
  };
  for (const auto& [z, c] : a.counts) total += abs(freq(c, ta) - freq(b.counts.count(z), tb));
  for (const auto& [z, c] : b.counts) {
    if (a.counts.count(z) == 0) total += freq(c, tb);
  }
  return total / 2;
}

}  // namespace liouville
