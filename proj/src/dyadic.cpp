#include "liouville/dyadic.hpp"

#include <functional>

#include "liouville/error.hpp"

namespace liouville {

namespace {

// a * 2^-ea and b * 2^-eb brought to the common exponent max(ea, eb).
std::pair<BigInt, BigInt> aligned(const Dyadic& a, const Dyadic& b) {
  BigInt x = a.num();
  BigInt y = b.num();
  if (a.exp() < b.exp()) {
    mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), b.exp() - a.exp());
  } else if (b.exp() < a.exp()) {
    mpz_mul_2exp(y.get_mpz_t(), y.get_mpz_t(), a.exp() - b.exp());
  }
  return {std::move(x), std::move(y)};
}

}  // namespace

void Dyadic::reduce() {
  if (sgn(num_) == 0) {
    exp_ = 0;
    return;
  }
  if (exp_ == 0) return;
  const auto twos = mpz_scan1(num_.get_mpz_t(), 0);
  const auto shift = twos < exp_ ? twos : exp_;
  if (shift > 0) {
    mpz_tdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), shift);
    exp_ -= shift;
  }
}

Dyadic Dyadic::normalize(BigInt num, std::uint64_t exp) {
  Dyadic d;
  d.num_ = std::move(num);
  d.exp_ = exp;
  d.reduce();
  return d;
}

Dyadic Dyadic::mul_pow2(std::int64_t e) const {
  if (is_zero() || e == 0) return *this;
  Dyadic d = *this;
  if (e < 0) {
    d.exp_ += static_cast<std::uint64_t>(-e);
    d.reduce();
    return d;
  }
  const auto up = static_cast<std::uint64_t>(e);
  if (up <= d.exp_) {
    d.exp_ -= up;
  } else {
    mpz_mul_2exp(d.num_.get_mpz_t(), d.num_.get_mpz_t(), up - d.exp_);
    d.exp_ = 0;
  }
  return d;
}

std::optional<std::int64_t> Dyadic::log2_exact() const {
  if (sign() <= 0) return std::nullopt;
  if (exp_ > 0) {
    if (num_ != 1) return std::nullopt;
    return -static_cast<std::int64_t>(exp_);
  }
  const auto bit = mpz_scan1(num_.get_mpz_t(), 0);
  if (mpz_popcount(num_.get_mpz_t()) != 1) return std::nullopt;
  return static_cast<std::int64_t>(bit);
}

BigInt Dyadic::floor() const {
  BigInt r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), num_.get_mpz_t(), exp_);
  return r;
}

BigInt Dyadic::ceil() const {
  BigInt r;
  mpz_cdiv_q_2exp(r.get_mpz_t(), num_.get_mpz_t(), exp_);
  return r;
}

Rational Dyadic::to_rational() const {
  BigInt den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), exp_);
  return make_rational(num_, den);
}

std::string Dyadic::to_string() const {
  if (exp_ == 0) return num_.get_str();
  return num_.get_str() + "/2^" + std::to_string(exp_);
}

Dyadic Dyadic::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Dyadic(parse_rational(text).get_num());
  const auto den_text = text.substr(slash + 1);
  if (den_text.starts_with("2^")) {
    const auto exp_text = den_text.substr(2);
    bool ok = !exp_text.empty() && exp_text.size() < 19;
    for (char c : exp_text) ok = ok && c >= '0' && c <= '9';
    if (!ok) throw Error(Errc::Parse, "bad dyadic exponent in '" + std::string(text) + "'");
    const BigInt num = parse_rational(text.substr(0, slash)).get_num();
    return normalize(num, std::stoull(std::string(exp_text)));
  }
  const Rational q = parse_rational(text);
  const auto k = Dyadic(q.get_den()).log2_exact();
  if (!k) throw Error(Errc::Parse, "denominator is not a power of two: '" + std::string(text) + "'");
  return normalize(q.get_num(), static_cast<std::uint64_t>(*k));
}

std::size_t Dyadic::hash() const noexcept {
  const auto& z = *num_.get_mpz_t();
  std::size_t h = std::hash<std::uint64_t>{}(exp_) ^ static_cast<std::size_t>(z._mp_size);
  const int limbs = z._mp_size < 0 ? -z._mp_size : z._mp_size;
  for (int i = 0; i < limbs; ++i) {
    h ^= std::hash<mp_limb_t>{}(z._mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.exp_ == b.exp_) return Dyadic::normalize(a.num_ + b.num_, a.exp_);
  auto [x, y] = aligned(a, b);
  return Dyadic::normalize(x + y, std::max(a.exp_, b.exp_));
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  if (a.exp_ == b.exp_) return Dyadic::normalize(a.num_ - b.num_, a.exp_);
  auto [x, y] = aligned(a, b);
  return Dyadic::normalize(x - y, std::max(a.exp_, b.exp_));
}

Dyadic operator-(const Dyadic& a) {
  Dyadic d = a;
  d.num_ = -d.num_;
  return d;
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic::normalize(a.num_ * b.num_, a.exp_ + b.exp_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int c = 0;
  if (a.exp_ == b.exp_) {
    c = cmp(a.num_, b.num_);
  } else {
    const int sa = a.sign();
    const int sb = b.sign();
    if (sa != sb) {
      c = sa < sb ? -1 : 1;
    } else {
      auto [x, y] = aligned(a, b);
      c = cmp(x, y);
    }
  }
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Ordering compare(const Dyadic& a, const Dyadic& b) {
  const auto c = a <=> b;
  if (c < 0) return Ordering::LT;
  if (c > 0) return Ordering::GT;
  return Ordering::EQ;
}

}  // namespace liouville
