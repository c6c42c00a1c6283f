#include "liouville/point_set.hpp"

#include <algorithm>

#include "liouville/error.hpp"

namespace liouville {

PointSet::PointSet(std::vector<Dyadic> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
    throw Error(Errc::InvalidArgument, "point set has a repeated point");
  }
}

PointSet PointSet::from_sorted(std::vector<Dyadic> points) {
  PointSet p;
  p.points_ = std::move(points);
  return p;
}

std::string PointSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i > 0) out += ',';
    out += points_[i].to_string();
  }
  return out;
}

PointSet PointSet::parse(std::string_view text) {
  std::vector<Dyadic> points;
  while (!text.empty()) {
    const auto comma = text.find(',');
    points.push_back(Dyadic::parse(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return PointSet(std::move(points));
}

std::vector<PointSet> subsets_of_size(const PointSet& support, std::size_t k) {
  std::vector<PointSet> out;
  const std::size_t n = support.size();
  if (k == 0 || k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<Dyadic> pts;
    pts.reserve(k);
    for (auto i : idx) pts.push_back(support[i]);
    out.push_back(PointSet::from_sorted(std::move(pts)));
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace liouville
