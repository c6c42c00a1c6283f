#include "liouville/action.hpp"

#include <algorithm>

#include "liouville/error.hpp"
#include "liouville/parallel.hpp"

namespace liouville {

PointSet act_set(const PLMap& g, const PointSet& x) {
  std::vector<Dyadic> image;
  image.reserve(x.size());
  for (const auto& p : x) image.push_back(g.apply(p));
  // g is increasing, so the image is already sorted.
  return PointSet::from_sorted(std::move(image));
}

std::vector<Dyadic> gap_vector(const PointSet& x) {
  if (x.size() < 2) throw Error(Errc::TooSmall, "gap vector needs at least two points");
  std::vector<Dyadic> gaps;
  gaps.reserve(x.size() - 1);
  for (std::size_t i = 1; i < x.size(); ++i) gaps.push_back(x[i] - x[i - 1]);
  return gaps;
}

Multiset<PointSet> multiset_image(std::span<const PLMap> elements, const PointSet& x) {
  Multiset<PointSet> out;
  for (const auto& e : elements) out.insert(act_set(e, x));
  return out;
}

Rational sym_diff_ratio(const Multiset<PointSet>& ex, const Multiset<PointSet>& ey,
                        std::uint64_t group_size, Semantics semantics) {
  if (group_size == 0) throw Error(Errc::InvalidArgument, "E is empty");
  const auto diff = semantics == Semantics::Multiset ? sym_diff_size(ex, ey)
                                                     : support_sym_diff_size(ex, ey);
  return make_rational(BigInt(static_cast<unsigned long>(diff)),
                       BigInt(static_cast<unsigned long>(group_size)));
}

Rational sym_diff_ratio(std::span<const PLMap> elements, const PointSet& x, const PointSet& y,
                        Semantics semantics) {
  if (x.size() != y.size()) {
    throw Error(Errc::SizeMismatch, "point sets of sizes " + std::to_string(x.size()) + " and " +
                                        std::to_string(y.size()));
  }
  if (elements.empty()) throw Error(Errc::InvalidArgument, "E is empty");
  return sym_diff_ratio(multiset_image(elements, x), multiset_image(elements, y),
                        elements.size(), semantics);
}

CoFolnerCertificate verify_cofolner(std::vector<PLMap> elements, std::vector<PointSet> family,
                                    const Rational& epsilon, Semantics semantics,
                                    unsigned workers) {
  if (elements.empty()) throw Error(Errc::InvalidArgument, "E is empty");
  for (const auto& x : family) {
    if (x.size() != family.front().size()) {
      throw Error(Errc::SizeMismatch, "family mixes point sets of different sizes");
    }
  }
  std::vector<Multiset<PointSet>> images(family.size());
  parallel_for(family.size(), workers,
               [&](std::size_t i) { images[i] = multiset_image(elements, family[i]); });

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) pairs.emplace_back(i, j);
  }
  std::vector<Rational> ratios(pairs.size());
  parallel_for(pairs.size(), workers, [&](std::size_t p) {
    ratios[p] = sym_diff_ratio(images[pairs[p].first], images[pairs[p].second],
                               elements.size(), semantics);
  });

  CoFolnerCertificate cert;
  cert.achieved = 0;
  for (const auto& q : ratios) cert.achieved = std::max(cert.achieved, q);
  cert.E = std::move(elements);
  cert.F = std::move(family);
  cert.epsilon = epsilon;
  cert.verified = cert.achieved <= epsilon;
  cert.semantics = semantics;
  return cert;
}

ScaledFamily scale_to_naturals(std::span<const PointSet> family) {
  ScaledFamily out;
  std::uint64_t e = 0;
  for (const auto& x : family) {
    for (const auto& p : x) {
      if (p.sign() < 0) {
        throw Error(Errc::InvalidArgument, "negative point " + p.to_string() + "; translate first");
      }
      e = std::max(e, p.exp());
    }
  }
  out.i = static_cast<std::int64_t>(e);
  out.family.reserve(family.size());
  for (const auto& x : family) {
    std::vector<Dyadic> pts;
    pts.reserve(x.size());
    for (const auto& p : x) pts.push_back(p.mul_pow2(out.i));
    out.family.push_back(PointSet::from_sorted(std::move(pts)));
  }
  return out;
}

}  // namespace liouville
