#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace liouville {

using BigInt = mpz_class;
using Rational = mpq_class;

// "p/q" with q > 0, always including the denominator ("0/1", "2/1").
std::string to_string(const Rational& q);

// Accepts "p/q" or a bare integer "p". The result is canonicalized.
Rational parse_rational(std::string_view text);

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace liouville
