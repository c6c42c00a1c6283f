#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "liouville/multiset.hpp"
#include "liouville/plmap.hpp"
#include "liouville/point_set.hpp"
#include "liouville/rational.hpp"

namespace liouville {

/// g·x, the pointwise image of an n-subset.
PointSet act_set(const PLMap& g, const PointSet& x);

/// Consecutive gaps (x2-x1, ..., xn-x(n-1)). Throws TooSmall for n < 2.
std::vector<Dyadic> gap_vector(const PointSet& x);

/// Ex = {e·x : e in E}, counted with multiplicity; size() == |E|.
Multiset<PointSet> multiset_image(std::span<const PLMap> elements, const PointSet& x);

/// How |Ex Δ Ey| is counted. Multiset is the l1 distance of image counts;
/// Set compares only which images occur.
enum class Semantics { Multiset, Set };

/// |Ex Δ Ey| / |E|. Throws SizeMismatch when |x| != |y|, InvalidArgument when
/// E is empty.
Rational sym_diff_ratio(std::span<const PLMap> elements, const PointSet& x, const PointSet& y,
                        Semantics semantics = Semantics::Multiset);

/// Same ratio computed from precomputed images.
Rational sym_diff_ratio(const Multiset<PointSet>& ex, const Multiset<PointSet>& ey,
                        std::uint64_t group_size, Semantics semantics = Semantics::Multiset);

/// Parameters recorded by the construction that produced a certificate.
struct PipelineInfo {
  std::string group = "F_R";
  std::int64_t i_scale = 0;
  std::optional<PLMap> conjugator;  // right factor applied before the lift
  std::uint64_t L = 0;
  std::uint64_t N = 0;
  std::vector<std::int64_t> r;
  struct Step {
    std::uint64_t L;
    std::uint64_t N;
    Rational achieved;
  };
  std::vector<Step> history;
  std::string status;  // "verified" or "budget_exceeded"
};

/// A finite E ⊂ G together with a family F of equal-size point sets and the
/// exact worst-case ratio max_{x,y in F} |Ex Δ Ey| / |E|.
struct CoFolnerCertificate {
  std::vector<PLMap> E;
  std::vector<PointSet> F;
  Rational epsilon;
  Rational achieved;
  bool verified = false;
  Semantics semantics = Semantics::Multiset;
  std::optional<PipelineInfo> pipeline;
};

/// Recomputes every pairwise ratio over F. Images are computed once per point
/// set; pairs are evaluated over `workers` threads and max-reduced.
CoFolnerCertificate verify_cofolner(std::vector<PLMap> elements, std::vector<PointSet> family,
                                    const Rational& epsilon,
                                    Semantics semantics = Semantics::Multiset,
                                    unsigned workers = 1);

struct ScaledFamily {
  std::int64_t i = 0;
  std::vector<PointSet> family;
};

/// Smallest i >= 0 with 2^i·p a natural number for every point p, and the
/// scaled family. Points must be non-negative (InvalidArgument otherwise).
ScaledFamily scale_to_naturals(std::span<const PointSet> family);

}  // namespace liouville
