#include <doctest.h>

#include "liouville/dyadic.hpp"
#include "liouville/error.hpp"
#include "liouville/point_set.hpp"
#include "support.hpp"

using namespace liouville;

namespace {
Dyadic d(const char* s) { return Dyadic::parse(s); }
}  // namespace

TEST_CASE("normalize reduces to an odd numerator") {
  auto a = Dyadic::normalize(6, 1);
  CHECK(a.num() == 3);
  CHECK(a.exp() == 0);
  auto z = Dyadic::normalize(0, 7);
  CHECK(z.num() == 0);
  CHECK(z.exp() == 0);
  auto c = Dyadic::normalize(5, 3);
  CHECK(c.num() == 5);
  CHECK(c.exp() == 3);
  CHECK(Dyadic::normalize(-12, 4).to_string() == "-3/2^2");
}

TEST_CASE("addition and subtraction") {
  CHECK(d("1/2") + d("1/4") == d("3/4"));
  CHECK(Dyadic(3) + Dyadic(-3) == Dyadic(0));
  CHECK(d("5/8") + d("3/8") == Dyadic(1));
  CHECK((Dyadic(1) - d("1/2^3")).to_string() == "7/2^3");
  CHECK(-d("3/4") == d("-3/4"));
}

TEST_CASE("mul_pow2") {
  CHECK(d("3/4").mul_pow2(2) == Dyadic(3));
  CHECK(Dyadic(3).mul_pow2(-2) == d("3/4"));
  CHECK(Dyadic(0).mul_pow2(5) == Dyadic(0));
  CHECK(Dyadic(5).mul_pow2(3) == Dyadic(40));
  CHECK(Dyadic(12).mul_pow2(-3).to_string() == "3/2^1");
  CHECK((Dyadic(4) * Dyadic::parse("1/8")).to_string() == "1/2^1");
}

TEST_CASE("compare") {
  CHECK(compare(d("1/2"), d("3/4")) == Ordering::LT);
  CHECK(compare(Dyadic(1), Dyadic(1)) == Ordering::EQ);
  CHECK(compare(d("-1/2"), d("-3/4")) == Ordering::GT);
}

TEST_CASE("parse and print") {
  CHECK(d("3/2^2").to_string() == "3/2^2");
  CHECK(d("6/8").to_string() == "3/2^2");
  CHECK(d("-7").to_string() == "-7");
  CHECK(d("0/2^5").to_string() == "0");
  CHECK_THROWS_AS(d("1/3"), Error);
  CHECK_THROWS_AS(d("abc"), Error);
  CHECK_THROWS_AS(d(""), Error);
}

TEST_CASE("floor, ceil, log2") {
  CHECK(d("7/4").floor() == 1);
  CHECK(d("7/4").ceil() == 2);
  CHECK(d("-7/4").floor() == -2);
  CHECK(d("-7/4").ceil() == -1);
  CHECK(Dyadic(8).log2_exact() == 3);
  CHECK(d("1/8").log2_exact() == -3);
  CHECK_FALSE(Dyadic(6).log2_exact().has_value());
  CHECK_FALSE(Dyadic(-2).log2_exact().has_value());
}

TEST_CASE("arithmetic agrees with rationals and stays canonical") {
  testing::Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    const auto a = testing::random_dyadic(rng);
    const auto b = testing::random_dyadic(rng);
    CHECK((a + b).to_rational() == a.to_rational() + b.to_rational());
    CHECK((a - b).to_rational() == a.to_rational() - b.to_rational());
    CHECK((a * b).to_rational() == a.to_rational() * b.to_rational());
    CHECK(testing::canonical(a + b));
    CHECK(testing::canonical(a * b));
    CHECK(((a < b) == (a.to_rational() < b.to_rational())));
    CHECK(Dyadic::parse(a.to_string()) == a);
    if (a == b) CHECK(a.hash() == b.hash());
  }
}

TEST_CASE("point sets sort and reject duplicates") {
  PointSet x{Dyadic(3), Dyadic(1), d("1/2")};
  CHECK(x.to_string() == "1/2^1,1,3");
  CHECK(PointSet::parse("3,1,1/2") == x);
  CHECK_THROWS_AS(PointSet({Dyadic(1), Dyadic(1)}), Error);
  const auto subsets = subsets_of_size(PointSet{Dyadic(0), Dyadic(1), Dyadic(2)}, 2);
  REQUIRE(subsets.size() == 3);
  CHECK(subsets[0].to_string() == "0,1");
  CHECK(subsets[2].to_string() == "1,2");
}
