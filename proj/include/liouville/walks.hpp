#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "liouville/action.hpp"
#include "liouville/measure.hpp"

namespace liouville {

/// p_μ(x, y) = Σ_{g : g·x = y} μ(g).
Rational transition_probability(const ProbMeasure& mu, const PointSet& x, const PointSet& y);

/// The one-step law y -> p_μ(x, y), over the images of x under the atoms.
std::map<PointSet, Rational> one_step_law(const ProbMeasure& mu, const PointSet& x);

/// The exact law after k steps, by repeated one-step convolution. Intended
/// for small k only (support grows with every step).
std::map<PointSet, Rational> exact_law(const ProbMeasure& mu, const PointSet& start, std::uint64_t k);

/// A function on point sets: finitely many listed values plus a default.
struct FunctionTable {
  std::map<PointSet, Rational> values;
  Rational default_value = 0;

  const Rational& operator()(const PointSet& x) const;
};

/// |f(x) - Σ_y f(y) p_μ(x, y)|, exactly.
Rational harmonicity_residual(const FunctionTable& f, const ProbMeasure& mu, const PointSet& x);

struct EmpiricalDistribution {
  Multiset<PointSet> counts;
  std::uint64_t trials = 0;
  std::uint64_t step = 0;
  PointSet start;
  std::uint64_t seed = 0;
};

/// Endpoints of `trials` independent walks g_k ··· g_1 · start, with each
/// increment drawn from μ and multiplied on the left. Trial t always uses the
/// random stream keyed by (seed, t), so the result does not depend on the
/// number of workers.
EmpiricalDistribution simulate(const ProbMeasure& mu, const PointSet& start, std::uint64_t k,
                               std::uint64_t trials, std::uint64_t seed, unsigned workers = 1);

/// As simulate, recording the same walks at every step count in `ks`. The
/// distribution for ks[i] equals simulate(mu, start, ks[i], trials, seed).
std::vector<EmpiricalDistribution> simulate_checkpoints(const ProbMeasure& mu,
                                                        const PointSet& start,
                                                        std::span<const std::uint64_t> ks,
                                                        std::uint64_t trials, std::uint64_t seed,
                                                        unsigned workers = 1);

/// ½ Σ_z |count1(z)/trials1 - count2(z)/trials2|.
Rational empirical_tv(const EmpiricalDistribution& a, const EmpiricalDistribution& b);

}  // namespace liouville
