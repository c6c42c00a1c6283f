#include <doctest.h>

#include "liouville/cofolner.hpp"
#include "liouville/error.hpp"
#include "support.hpp"

using namespace liouville;

namespace {
Dyadic d(const char* s) { return Dyadic::parse(s); }
std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}
}  // namespace

TEST_CASE("multiplicative boxes") {
  const std::vector<std::int64_t> two{2};
  CHECK(build_box(two, 3).elements() == ints({1, 2, 4}));
  const std::vector<std::int64_t> two_three{2, 3};
  CHECK(build_box(two_three, 2).elements() == ints({1, 2, 3, 6}));
  const std::vector<std::int64_t> one{1};
  CHECK(build_box(one, 5).elements() == ints({1}));
  const auto box = build_box(two, 4);
  CHECK(box.invariance(2) == make_rational(3, 4));
  CHECK(box.contains(8));
  CHECK_FALSE(box.contains(16));
  const auto big = build_box(two_three, 5);
  CHECK(big.invariance(3) == make_rational(4, 5));
}

TEST_CASE("consecutive sums") {
  CHECK(consecutive_sums(Multipliers::ones(2)) == std::vector<std::int64_t>{2});
  CHECK(consecutive_sums(Multipliers{{1, 2}}) == std::vector<std::int64_t>{2, 3});
  CHECK(Multipliers{{1, 2, 3}}.sum() == 6);
}

TEST_CASE("build_w") {
  const std::vector<std::int64_t> two{2};
  CHECK(build_w(Multipliers::ones(2), build_box(two, 2)) == CandidateSet::parse("1,1;2,2"));
  CHECK(build_w(Multipliers{{1, 2}}, build_box(two, 1)) == CandidateSet::parse("1,2"));
  CHECK(build_w(Multipliers::ones(3), build_box(two, 3)) == CandidateSet::parse("1,1,1;2,2,2;4,4,4"));
}

TEST_CASE("lift_to_group") {
  const PointSet s{Dyadic(0), Dyadic(1), Dyadic(2)};
  auto g1 = lift_to_group(CandidateSet::parse("1,1"), s);
  REQUIRE(g1.size() == 1);
  CHECK(act_set(g1[0], s) == s);
  auto g2 = lift_to_group(CandidateSet::parse("2,2"), s);
  CHECK(act_set(g2[0], s) == PointSet{Dyadic(0), Dyadic(2), Dyadic(4)});
  auto g3 = lift_to_group(CandidateSet::parse("1"), PointSet{Dyadic(5), Dyadic(7)});
  CHECK(g3[0](Dyadic(5)) == Dyadic(0));
  CHECK(g3[0](Dyadic(7)) == Dyadic(1));
  CHECK_THROWS_AS(lift_to_group(CandidateSet::parse("1,1"), PointSet{Dyadic(0), Dyadic(1)}), Error);
}

TEST_CASE("shift averaging") {
  const std::vector<PLMap> id{PLMap::identity()};
  const auto e = shift_average(id, 3);
  REQUIRE(e.size() == 3);
  for (long k = 1; k <= 3; ++k) CHECK(e[k - 1] == PLMap::translation(Dyadic(k)));
  const std::vector<PLMap> two{PLMap::identity(), PLMap::scale_pow2(1)};
  CHECK(shift_average(two, 7).size() == 14);
  const auto e50 = shift_average(id, 50);
  const auto x = multiset_image(e50, PointSet{Dyadic(0), Dyadic(1)});
  const auto y = multiset_image(e50, PointSet{Dyadic(1), Dyadic(2)});
  const std::vector xy{x, y};
  CHECK(intersect<PointSet>(xy).size() == 49);
}

TEST_CASE("gap-matched images agree after alignment") {
  const PointSet s{Dyadic(0), Dyadic(1), Dyadic(2)};
  const std::vector<std::int64_t> two{2};
  const auto box = build_box(two, 3);
  const auto lifted = lift_to_group(build_w(Multipliers::ones(2), box), s);
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    const auto a = box.elements()[i];
    CHECK(gap_vector(act_set(lifted[i], PointSet{Dyadic(0), Dyadic(1)})) == std::vector<Dyadic>{Dyadic(a)});
    CHECK(gap_vector(act_set(lifted[i], PointSet{Dyadic(0), Dyadic(2)})) == std::vector<Dyadic>{Dyadic(2 * a)});
  }
}

TEST_CASE("default shift count") {
  CHECK(default_shift_count(BigInt(2), make_rational(3, 10)) == 27);
  CHECK(default_shift_count(BigInt(4), make_rational(3, 10)) == 54);
  CHECK(default_shift_count(BigInt(1), Rational(100)) == 1);
}

TEST_CASE("singleton certificates") {
  BuildParams p;
  p.N = 100;
  p.auto_escalate = false;
  auto c = build_cofolner(PointSet{Dyadic(0), Dyadic(1)}, 1, make_rational(1, 10), p);
  CHECK(c.achieved == make_rational(2, 100));
  CHECK(c.verified);
  CHECK(c.E.size() == 100);
  auto single = build_cofolner(PointSet{Dyadic(0)}, 1, make_rational(1, 10));
  CHECK(single.F.size() == 1);
  CHECK(single.achieved == 0);
  auto scaled = build_cofolner(PointSet{d("1/2"), d("3/4")}, 1, make_rational(1, 4));
  CHECK(scaled.verified);
  CHECK(scaled.pipeline->i_scale == 2);
  auto neg = build_cofolner(PointSet{Dyadic(-3), Dyadic(-1)}, 1, make_rational(1, 2));
  CHECK(neg.verified);
  CHECK(neg.pipeline->conjugator.has_value());
}

TEST_CASE("pair certificates") {
  BuildParams p;
  p.L = 8;
  auto c = build_cofolner(PointSet{Dyadic(0), Dyadic(1), Dyadic(2)}, 2, make_rational(3, 10), p);
  CHECK(c.verified);
  CHECK(c.pipeline->N == 3414);
  CHECK(c.achieved == verify_cofolner(c.E, c.F, c.epsilon).achieved);
  CHECK(c.F.size() == 3);

  BuildParams once;
  once.L = 2;
  once.N = 54;
  once.auto_escalate = false;
  auto low = build_cofolner(PointSet{Dyadic(0), Dyadic(1), Dyadic(2)}, 2, make_rational(3, 10), once);
  CHECK_FALSE(low.verified);
  CHECK(low.pipeline->history.size() == 1);

  BuildParams unequal;
  unequal.r = std::vector<std::int64_t>{1, 2};
  auto u = build_cofolner(PointSet{Dyadic(0), Dyadic(1), Dyadic(3)}, 2, make_rational(9, 10), unequal);
  CHECK(u.verified);
  CHECK(u.pipeline->L == 4);
  unequal.max_elements = 100000;
  auto capped = build_cofolner(PointSet{Dyadic(0), Dyadic(1), Dyadic(3)}, 2, make_rational(1, 2), unequal);
  CHECK_FALSE(capped.verified);
  CHECK(capped.pipeline->status == "budget_exceeded");
  CHECK_THROWS_AS(build_cofolner(PointSet{Dyadic(0), Dyadic(1)}, 3, make_rational(1, 2)), Error);
  CHECK_THROWS_AS(build_cofolner(PointSet{Dyadic(0), Dyadic(1)}, 1, Rational(0)), Error);
}

TEST_CASE("certificates re-expressed in F") {
  BuildParams p;
  p.into_f = true;
  auto c = build_cofolner(PointSet{d("1/2"), d("3/4")}, 1, make_rational(1, 4), p);
  CHECK(c.verified);
  CHECK(c.pipeline->group == "F");
  for (const auto& g : c.E) CHECK(g.in_thompson_f());
  CHECK(verify_cofolner(c.E, c.F, c.epsilon).achieved == c.achieved);
  CHECK(c.F[0] == PointSet{d("1/2")});
}
