#include <doctest.h>

#include "liouville/action.hpp"
#include "liouville/error.hpp"
#include "support.hpp"

using namespace liouville;

namespace {
Dyadic d(const char* s) { return Dyadic::parse(s); }
PLMap T(long k = 1) { return PLMap::translation(Dyadic(k)); }
std::vector<PLMap> translates(std::uint64_t n) {
  std::vector<PLMap> e;
  for (std::uint64_t k = 1; k <= n; ++k) e.push_back(T(static_cast<long>(k)));
  return e;
}
}  // namespace

TEST_CASE("act_set and gap_vector") {
  CHECK(act_set(T(), PointSet{Dyadic(0), Dyadic(1)}) == PointSet{Dyadic(1), Dyadic(2)});
  const PointSet x{d("1/2"), Dyadic(3)};
  CHECK(act_set(PLMap::identity(), x) == x);
  const auto w = transitivity_witness(PointSet{Dyadic(0), Dyadic(1)}, PointSet{Dyadic(0), Dyadic(2)}, WitnessMode::FR);
  CHECK(act_set(w, PointSet{Dyadic(0), d("1/2")}) == PointSet{Dyadic(0), Dyadic(1)});
  CHECK(gap_vector(PointSet{Dyadic(3), Dyadic(7)}) == std::vector<Dyadic>{Dyadic(4)});
  CHECK(gap_vector(PointSet{Dyadic(1), Dyadic(4), Dyadic(9)}) == std::vector<Dyadic>{Dyadic(3), Dyadic(5)});
  CHECK(gap_vector(PointSet{Dyadic(0), Dyadic(1)}) == std::vector<Dyadic>{Dyadic(1)});
  CHECK_THROWS_AS(gap_vector(PointSet{Dyadic(0)}), Error);
}

TEST_CASE("multiset images") {
  const std::vector<PLMap> e1{T(1), T(2)};
  const auto m1 = multiset_image(e1, PointSet{Dyadic(0)});
  CHECK(m1.count(PointSet{Dyadic(1)}) == 1);
  CHECK(m1.count(PointSet{Dyadic(2)}) == 1);
  const std::vector<PLMap> e2{T(), T()};
  const auto m2 = multiset_image(e2, PointSet{Dyadic(0)});
  CHECK(m2.count(PointSet{Dyadic(1)}) == 2);
  CHECK(m2.distinct() == 1);
  const std::vector<PLMap> e3{PLMap::identity(), T()};
  const auto m3 = multiset_image(e3, PointSet{Dyadic(0), Dyadic(1)});
  CHECK(m3.count(PointSet{Dyadic(0), Dyadic(1)}) == 1);
  CHECK(m3.count(PointSet{Dyadic(1), Dyadic(2)}) == 1);
}

TEST_CASE("sym_diff_ratio") {
  const std::vector<PLMap> e{T(1), T(2)};
  CHECK(sym_diff_ratio(e, PointSet{Dyadic(0)}, PointSet{Dyadic(1)}) == 1);
  CHECK(sym_diff_ratio(e, PointSet{Dyadic(5)}, PointSet{Dyadic(5)}) == 0);
  for (std::uint64_t n : {1, 7, 50}) {
    CHECK(sym_diff_ratio(translates(n), PointSet{Dyadic(0)}, PointSet{Dyadic(1)}) == make_rational(2, static_cast<long>(n)));
  }
  CHECK_THROWS_AS(sym_diff_ratio(e, PointSet{Dyadic(0)}, PointSet{Dyadic(0), Dyadic(1)}), Error);
  const std::vector<PLMap> dup{T(), T(), T(2)};
  CHECK(sym_diff_ratio(dup, PointSet{Dyadic(0)}, PointSet{Dyadic(1)}) == make_rational(4, 3));
  CHECK(sym_diff_ratio(dup, PointSet{Dyadic(0)}, PointSet{Dyadic(1)}, Semantics::Set) == make_rational(2, 3));
}

TEST_CASE("sym_diff is a right-invariant pseudometric") {
  testing::Rng rng(21);
  for (int i = 0; i < 40; ++i) {
    std::vector<PLMap> e;
    for (int j = 0; j < 6; ++j) e.push_back(testing::random_map(rng, 4, 6, 3, 2).map);
    const auto x = testing::random_point_set(rng, 2, false);
    const auto y = testing::random_point_set(rng, 2, false);
    const auto z = testing::random_point_set(rng, 2, false);
    const auto xy = sym_diff_ratio(e, x, y);
    CHECK(xy == sym_diff_ratio(e, y, x));
    CHECK(xy <= sym_diff_ratio(e, x, z) + sym_diff_ratio(e, z, y));
    CHECK(xy <= 2);
    const auto g = testing::random_map(rng, 4, 6, 3, 2).map;
    std::vector<PLMap> eg;
    for (const auto& h : e) eg.push_back(compose(h, g.inverse()));
    CHECK(sym_diff_ratio(eg, act_set(g, x), act_set(g, y)) == xy);
  }
}

TEST_CASE("verify_cofolner") {
  const std::vector<PointSet> f{PointSet{Dyadic(0)}, PointSet{Dyadic(1)}};
  auto c = verify_cofolner(translates(100), f, make_rational(1, 10));
  CHECK(c.achieved == make_rational(2, 100));
  CHECK(c.verified);
  auto bad = verify_cofolner({PLMap::identity()}, f, make_rational(1, 10));
  CHECK(bad.achieved == 2);
  CHECK_FALSE(bad.verified);
  auto one = verify_cofolner({T()}, {PointSet{Dyadic(0)}}, make_rational(1, 10));
  CHECK(one.achieved == 0);
  CHECK(one.verified);
  auto parallel = verify_cofolner(translates(100), f, make_rational(1, 10), Semantics::Multiset, 4);
  CHECK(parallel.achieved == c.achieved);
}

TEST_CASE("scale_to_naturals") {
  const std::vector<PointSet> f1{PointSet{d("1/2"), d("3/4")}};
  auto s1 = scale_to_naturals(f1);
  CHECK(s1.i == 2);
  CHECK(s1.family[0] == PointSet{Dyadic(2), Dyadic(3)});
  const std::vector<PointSet> f2{PointSet{Dyadic(1), Dyadic(2)}};
  auto s2 = scale_to_naturals(f2);
  CHECK(s2.i == 0);
  CHECK(s2.family == f2);
  const std::vector<PointSet> f3{PointSet{Dyadic(0), d("5/8")}};
  auto s3 = scale_to_naturals(f3);
  CHECK(s3.i == 3);
  CHECK(s3.family[0] == PointSet{Dyadic(0), Dyadic(5)});
  const std::vector<PointSet> neg{PointSet{Dyadic(-1)}};
  CHECK_THROWS_AS(scale_to_naturals(neg), Error);
}
