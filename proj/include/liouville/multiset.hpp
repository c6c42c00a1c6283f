#pragma once

#include <cstdint>
#include <map>
#include <span>

namespace liouville {

/// Finite multiset: key -> strictly positive count. Ordered so iteration (and
/// anything serialized from it) is deterministic.
template <typename Key>
class Multiset {
 public:
  using Map = std::map<Key, std::uint64_t>;

  void insert(const Key& key, std::uint64_t count = 1) {
    if (count == 0) return;
    entries_[key] += count;
    size_ += count;
  }

  std::uint64_t count(const Key& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second;
  }

  std::uint64_t size() const noexcept { return size_; }
  std::size_t distinct() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return size_ == 0; }
  const Map& entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  friend bool operator==(const Multiset&, const Multiset&) = default;

 private:
  Map entries_;
  std::uint64_t size_ = 0;
};

/// Key-wise minimum of counts; keys missing from any operand are dropped.
template <typename Key>
Multiset<Key> intersect(std::span<const Multiset<Key>> ms) {
  Multiset<Key> out;
  if (ms.empty()) return out;
  for (const auto& [key, c] : ms.front()) {
    auto m = c;
    for (std::size_t i = 1; i < ms.size() && m > 0; ++i) m = std::min(m, ms[i].count(key));
    out.insert(key, m);
  }
  return out;
}

/// Size of the l1 symmetric difference: sum over keys of |count_a - count_b|.
template <typename Key>
std::uint64_t sym_diff_size(const Multiset<Key>& a, const Multiset<Key>& b) {
  std::uint64_t total = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      total += ia->second;
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      total += ib->second;
      ++ib;
    } else {
      total += ia->second > ib->second ? ia->second - ib->second : ib->second - ia->second;
      ++ia;
      ++ib;
    }
  }
  return total;
}

/// Number of keys present in exactly one of the two multisets.
template <typename Key>
std::uint64_t support_sym_diff_size(const Multiset<Key>& a, const Multiset<Key>& b) {
  std::uint64_t total = 0;
  for (const auto& [k, c] : a) total += b.count(k) == 0 ? 1 : 0;
  for (const auto& [k, c] : b) total += a.count(k) == 0 ? 1 : 0;
  return total;
}

}  // namespace liouville
