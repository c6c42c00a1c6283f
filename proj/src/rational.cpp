#include "liouville/rational.hpp"

#include "liouville/error.hpp"

namespace liouville {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  bool ok = !s.empty();
  for (std::size_t i = 0; i < s.size() && ok; ++i) {
    const char c = s[i];
    ok = (c >= '0' && c <= '9') || (i == 0 && c == '-' && s.size() > 1);
  }
  if (!ok) throw Error(Errc::Parse, "not an integer: '" + std::string(whole) + "'");
  return BigInt(s, 10);
}

}  // namespace

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error(Errc::Parse, "zero denominator: '" + std::string(text) + "'");
  return make_rational(num, den);
}

}  // namespace liouville
