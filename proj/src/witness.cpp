#include <algorithm>

#include "liouville/error.hpp"
#include "liouville/plmap.hpp"

namespace liouville {

namespace {

// Exponents of the power-of-two pieces of a positive dyadic length, largest
// first: m / 2^k  ->  { j - k : bit j of m is set }.
std::vector<std::int64_t> power_pieces(const Dyadic& length) {
  std::vector<std::int64_t> pieces;
  const auto& m = length.num();
  const auto k = static_cast<std::int64_t>(length.exp());
  const auto bits = static_cast<std::int64_t>(mpz_sizeinbase(m.get_mpz_t(), 2));
  for (std::int64_t j = bits - 1; j >= 0; --j) {
    if (mpz_tstbit(m.get_mpz_t(), static_cast<mp_bitcnt_t>(j))) pieces.push_back(j - k);
  }
  return pieces;
}

// Splits the largest piece of the shorter list in half until the counts agree.
void equalize(std::vector<std::int64_t>& a, std::vector<std::int64_t>& b) {
  while (a.size() != b.size()) {
    auto& shorter = a.size() < b.size() ? a : b;
    const auto it = std::max_element(shorter.begin(), shorter.end());
    const auto e = *it - 1;
    *it = e;
    shorter.insert(it, e);
  }
}

// Anchors of a map carrying [a, b] onto [c, d] with power-of-two slopes; the
// right endpoint (b, d) is not emitted.
void map_interval(const Dyadic& a, const Dyadic& b, const Dyadic& c, const Dyadic& d,
                  std::vector<Anchor>& out) {
  auto src = power_pieces(b - a);
  auto dst = power_pieces(d - c);
  equalize(src, dst);
  Dyadic x = a;
  Dyadic y = c;
  for (std::size_t i = 0; i < src.size(); ++i) {
    out.push_back({x, y});
    x += Dyadic(1).mul_pow2(src[i]);
    y += Dyadic(1).mul_pow2(dst[i]);
  }
}

PLMap piecewise_through(const std::vector<Dyadic>& src, const std::vector<Dyadic>& dst) {
  std::vector<Anchor> anchors;
  for (std::size_t i = 0; i + 1 < src.size(); ++i) {
    map_interval(src[i], src[i + 1], dst[i], dst[i + 1], anchors);
  }
  anchors.push_back({src.back(), dst.back()});
  return PLMap::make(std::move(anchors), 0, 0);
}

bool inside_unit_interval(const PointSet& p) {
  return std::all_of(p.begin(), p.end(),
                     [](const Dyadic& x) { return x.sign() > 0 && x < Dyadic(1); });
}

std::int64_t small(const BigInt& v) {
  if (!v.fits_slong_p()) throw Error(Errc::InvalidArgument, "coordinate too large: " + v.get_str());
  return v.get_si();
}

}  // namespace

PLMap transitivity_witness(const PointSet& src, const PointSet& dst, WitnessMode mode) {
  if (src.size() != dst.size()) {
    throw Error(Errc::SizeMismatch, "source has " + std::to_string(src.size()) +
                                        " points, target has " + std::to_string(dst.size()));
  }
  std::vector<Dyadic> from(src.begin(), src.end());
  std::vector<Dyadic> to(dst.begin(), dst.end());
  if (mode == WitnessMode::F) {
    if (!inside_unit_interval(src) || !inside_unit_interval(dst)) {
      throw Error(Errc::OutOfUnitInterval, "F-mode witnesses need points strictly inside (0,1)");
    }
    from.insert(from.begin(), Dyadic(0));
    to.insert(to.begin(), Dyadic(0));
    from.emplace_back(1);
    to.emplace_back(1);
  }
  if (from.empty()) return PLMap::identity();
  return piecewise_through(from, to);
}

Dyadic unit_to_line(const Dyadic& x) {
  if (x.sign() <= 0 || !(x < Dyadic(1))) {
    throw Error(Errc::OutOfUnitInterval, x.to_string() + " is not in (0,1)");
  }
  const Dyadic half = Dyadic(1).mul_pow2(-1);
  // k >= 1 with u in [2^-k-1, 2^-k], where u = x or 1 - x.
  auto level = [](const Dyadic& u) -> std::int64_t {
    const auto bits = static_cast<std::int64_t>(mpz_sizeinbase(u.num().get_mpz_t(), 2));
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(u.exp()) - bits);
  };
  if (x < half) {
    const auto k = level(x);
    return Dyadic(-k) + (x - Dyadic(1).mul_pow2(-k - 1)).mul_pow2(k + 1);
  }
  const auto k = level(Dyadic(1) - x);
  return Dyadic(k - 1) + (x - Dyadic(1) + Dyadic(1).mul_pow2(-k)).mul_pow2(k + 1);
}

Dyadic line_to_unit(const Dyadic& y) {
  const auto fl = small(y.floor());
  if (y.sign() >= 0) {
    const auto m = fl;
    return Dyadic(1) - Dyadic(1).mul_pow2(-(m + 1)) + (y - Dyadic(m)).mul_pow2(-(m + 2));
  }
  const auto k = -fl;
  return Dyadic(1).mul_pow2(-k - 1) + (y + Dyadic(k)).mul_pow2(-k - 1);
}

PLMap conjugate_into_unit_interval(const PLMap& g) {
  const auto& anchors = g.anchors();
  const Dyadic left_shift = anchors.front().y - anchors.front().x;
  const Dyadic right_shift = anchors.back().y - anchors.back().x;
  if (g.left_exp() != 0 || g.right_exp() != 0 || !left_shift.is_integer() ||
      !right_shift.is_integer()) {
    throw Error(Errc::NotConjugable, "tails must be integer translations");
  }
  const auto tl = small(left_shift.num());
  const auto tr = small(right_shift.num());
  // Beyond [lo, hi] both z and g(z) stay on one side of the origin, where the
  // conjugate is x -> 2^tl x near 0 and x -> 1 + 2^-tr (x - 1) near 1.
  const auto lo = std::min({small(anchors.front().x.floor()), small(anchors.front().y.floor()),
                            std::int64_t{0}}) -
                  2 - std::abs(tl);
  const auto hi = std::max({small(anchors.back().x.ceil()), small(anchors.back().y.ceil()),
                            std::int64_t{0}}) +
                  2 + std::abs(tr);
  const Dyadic zlo(lo);
  const Dyadic zhi(hi);
  std::vector<Dyadic> zs;
  for (auto j = lo; j <= hi; ++j) zs.emplace_back(j);
  const auto jlo = small(g.apply(zlo).floor());
  const auto jhi = small(g.apply(zhi).ceil());
  for (auto j = jlo; j <= jhi; ++j) {
    Dyadic z = g.apply_inverse(Dyadic(j));
    if (zlo <= z && z <= zhi) zs.push_back(std::move(z));
  }
  for (const auto& a : anchors) zs.push_back(a.x);
  std::sort(zs.begin(), zs.end());
  zs.erase(std::unique(zs.begin(), zs.end()), zs.end());

  std::vector<Anchor> out;
  out.reserve(zs.size() + 2);
  out.push_back({Dyadic(0), Dyadic(0)});
  for (const auto& z : zs) out.push_back({line_to_unit(z), line_to_unit(g.apply(z))});
  out.push_back({Dyadic(1), Dyadic(1)});
  return PLMap::make(std::move(out), 0, 0);
}

}  // namespace liouville
