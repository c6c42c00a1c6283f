#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "liouville/rational.hpp"

namespace liouville {

/// Exact dyadic rational num / 2^exp.
///
/// Values are always held in canonical form: num is odd, or num == 0 and
/// exp == 0. Equality and ordering are therefore value comparisons, and the
/// canonical pair is safe to use as a collection key.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Dyadic(const BigInt& value) : num_(value) { reduce(); }

  static Dyadic normalize(BigInt num, std::uint64_t exp);

  const BigInt& num() const noexcept { return num_; }
  std::uint64_t exp() const noexcept { return exp_; }

  int sign() const noexcept { return sgn(num_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const noexcept { return exp_ == 0; }

  /// The value times 2^e, for any sign of e.
  Dyadic mul_pow2(std::int64_t e) const;

  /// If the value is 2^k for an integer k, returns k.
  std::optional<std::int64_t> log2_exact() const;

  /// Largest integer <= value, and smallest integer >= value.
  BigInt floor() const;
  BigInt ceil() const;

  Rational to_rational() const;

  /// "num/2^exp" in canonical form; integers carry no "/2^0" suffix.
  std::string to_string() const;

  /// Parses the canonical text form. Also accepts non-canonical "n/2^k",
  /// plain integers and "p/q" with q a power of two.
  static Dyadic parse(std::string_view text);

  std::size_t hash() const noexcept;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

  Dyadic& operator+=(const Dyadic& b) { return *this = *this + b; }
  Dyadic& operator-=(const Dyadic& b) { return *this = *this - b; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) noexcept {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void reduce();

  BigInt num_{0};
  std::uint64_t exp_ = 0;
};

enum class Ordering { LT, EQ, GT };

Ordering compare(const Dyadic& a, const Dyadic& b);

}  // namespace liouville

template <>
struct std::hash<liouville::Dyadic> {
  std::size_t operator()(const liouville::Dyadic& d) const noexcept {
    return d.hash();
  }
};
