#include "liouville/plmap.hpp"

#include <algorithm>
#include <limits>

#include "liouville/error.hpp"

namespace liouville {

namespace {

// Slope exponent e with dy / dx = 2^e, for dx, dy > 0.
std::optional<std::int64_t> slope_exp(const Dyadic& dx, const Dyadic& dy) {
  const auto tx = static_cast<std::int64_t>(mpz_scan1(dx.num().get_mpz_t(), 0));
  const auto ty = static_cast<std::int64_t>(mpz_scan1(dy.num().get_mpz_t(), 0));
  BigInt ox, oy;
  mpz_fdiv_q_2exp(ox.get_mpz_t(), dx.num().get_mpz_t(), static_cast<mp_bitcnt_t>(tx));
  mpz_fdiv_q_2exp(oy.get_mpz_t(), dy.num().get_mpz_t(), static_cast<mp_bitcnt_t>(ty));
  if (ox != oy) return std::nullopt;
  return (ty - static_cast<std::int64_t>(dy.exp())) - (tx - static_cast<std::int64_t>(dx.exp()));
}

Dyadic affine(const Dyadic& x0, const Dyadic& y0, std::int64_t e, const Dyadic& x) {
  return y0 + (x - x0).mul_pow2(e);
}

}  // namespace

PLMap PLMap::make(std::vector<Anchor> anchors, std::int64_t left_exp,
                  std::int64_t right_exp) {
  if (anchors.empty()) throw Error(Errc::EmptyAnchors, "a PL map needs at least one anchor");
  std::sort(anchors.begin(), anchors.end(),
            [](const Anchor& a, const Anchor& b) { return a.x < b.x; });
  std::vector<std::int64_t> exps;
  exps.reserve(anchors.size() - 1);
  for (std::size_t i = 0; i + 1 < anchors.size(); ++i) {
    const auto& a = anchors[i];
    const auto& b = anchors[i + 1];
    if (a.x == b.x) throw Error(Errc::DuplicateX, "two anchors at x = " + a.x.to_string());
    if (!(a.y < b.y)) {
      throw Error(Errc::NonMonotone, "anchor y values decrease after x = " + a.x.to_string());
    }
    const auto e = slope_exp(b.x - a.x, b.y - a.y);
    if (!e) {
      throw Error(Errc::BadSlope, "slope " + to_string((b.y - a.y).to_rational() /
                                                       (b.x - a.x).to_rational()) +
                                      " on [" + a.x.to_string() + ", " + b.x.to_string() +
                                      "] is not a power of two");
    }
    exps.push_back(*e);
  }
  return canonical(std::move(anchors), std::move(exps), left_exp, right_exp);
}

PLMap PLMap::canonical(std::vector<Anchor> anchors, std::vector<std::int64_t> exps,
                       std::int64_t left_exp, std::int64_t right_exp) {
  PLMap m;
  m.left_exp_ = left_exp;
  m.right_exp_ = right_exp;
  const std::size_t n = anchors.size();
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n; ++i) {
    const auto before = i == 0 ? left_exp : exps[i - 1];
    const auto after = i + 1 == n ? right_exp : exps[i];
    if (before != after) kept.push_back(i);
  }
  if (kept.empty()) {
    m.anchors_.push_back({Dyadic(0), affine(anchors[0].x, anchors[0].y, left_exp, Dyadic(0))});
    return m;
  }
  m.anchors_.reserve(kept.size());
  for (std::size_t j = 0; j < kept.size(); ++j) {
    m.anchors_.push_back(std::move(anchors[kept[j]]));
    if (j + 1 < kept.size()) m.segment_exps_.push_back(exps[kept[j]]);
  }
  return m;
}

PLMap PLMap::identity() { return translation(Dyadic(0)); }

PLMap PLMap::translation(const Dyadic& d) {
  PLMap m;
  m.anchors_.push_back({Dyadic(0), d});
  return m;
}

PLMap PLMap::scale_pow2(std::int64_t i) {
  PLMap m;
  m.anchors_.push_back({Dyadic(0), Dyadic(0)});
  m.left_exp_ = i;
  m.right_exp_ = i;
  return m;
}

bool PLMap::is_identity() const noexcept {
  return anchors_.size() == 1 && left_exp_ == 0 && anchors_[0].y == anchors_[0].x;
}

std::size_t PLMap::piece_index(const Dyadic& x) const {
  // Number of anchors with anchor.x <= x.
  const auto it = std::upper_bound(anchors_.begin(), anchors_.end(), x,
                                   [](const Dyadic& v, const Anchor& a) { return v < a.x; });
  return static_cast<std::size_t>(it - anchors_.begin());
}

Dyadic PLMap::apply(const Dyadic& x) const {
  if (anchors_.size() == 1) {
    const auto& a = anchors_[0];
    return affine(a.x, a.y, x < a.x ? left_exp_ : right_exp_, x);
  }
  const auto k = piece_index(x);
  if (k == 0) return affine(anchors_[0].x, anchors_[0].y, left_exp_, x);
  const auto& a = anchors_[k - 1];
  const auto e = k == anchors_.size() ? right_exp_ : segment_exps_[k - 1];
  return affine(a.x, a.y, e, x);
}

Dyadic PLMap::apply_inverse(const Dyadic& y) const {
  const auto it = std::upper_bound(anchors_.begin(), anchors_.end(), y,
                                   [](const Dyadic& v, const Anchor& a) { return v < a.y; });
  const auto k = static_cast<std::size_t>(it - anchors_.begin());
  if (k == 0) return affine(anchors_[0].y, anchors_[0].x, -left_exp_, y);
  const auto& a = anchors_[k - 1];
  const auto e = k == anchors_.size() ? right_exp_ : segment_exps_[k - 1];
  return affine(a.y, a.x, -e, y);
}

PLMap PLMap::inverse() const {
  std::vector<Anchor> anchors;
  anchors.reserve(anchors_.size());
  for (const auto& a : anchors_) anchors.push_back({a.y, a.x});
  std::vector<std::int64_t> exps;
  exps.reserve(segment_exps_.size());
  for (auto e : segment_exps_) exps.push_back(-e);
  return canonical(std::move(anchors), std::move(exps), -left_exp_, -right_exp_);
}

PLMap PLMap::shifted(const Dyadic& d) const {
  PLMap m = *this;
  for (auto& a : m.anchors_) a.y += d;
  return m;
}

bool PLMap::in_thompson_f() const {
  if (left_exp_ != 0 || right_exp_ != 0) return false;
  const Dyadic zero(0);
  const Dyadic one(1);
  for (const auto& a : anchors_) {
    if (a.x < zero || a.x > one) return false;
  }
  return apply(zero) == zero && apply(one) == one;
}

PLMap compose(const PLMap& g, const PLMap& f) {
  std::vector<Dyadic> xs;
  xs.reserve(f.anchors().size() + g.anchors().size());
  for (const auto& a : f.anchors()) xs.push_back(a.x);
  for (const auto& a : g.anchors()) xs.push_back(f.apply_inverse(a.x));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Anchor> anchors;
  anchors.reserve(xs.size());
  for (auto& x : xs) {
    Dyadic y = g.apply(f.apply(x));
    anchors.push_back({std::move(x), std::move(y)});
  }
  return PLMap::make(std::move(anchors), g.left_exp() + f.left_exp(),
                     g.right_exp() + f.right_exp());
}

PLMap power(const PLMap& f, std::int64_t k) {
  PLMap base = k < 0 ? f.inverse() : f;
  auto n = k < 0 ? -static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
  PLMap result = PLMap::identity();
  while (n > 0) {
    if (n & 1U) result = compose(result, base);
    n >>= 1U;
    if (n > 0) base = compose(base, base);
  }
  return result;
}

}  // namespace liouville
