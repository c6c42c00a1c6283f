#include <doctest.h>

#include "liouville/error.hpp"
#include "liouville/objectives.hpp"
#include "support.hpp"

using namespace liouville;

namespace {
CandidateSet cs(const char* s) { return CandidateSet::parse(s); }
std::vector<BigInt> seq(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}
}  // namespace

TEST_CASE("multiset intersection") {
  Multiset<Key> a, b, c;
  const Key ka{1}, kb{2}, kc{3};
  a.insert(ka, 2);
  a.insert(kb);
  b.insert(ka);
  b.insert(kc);
  const auto ab = multiset_intersect(std::vector{a, b});
  CHECK(ab.count(ka) == 1);
  CHECK(ab.size() == 1);
  CHECK(multiset_intersect(std::vector{a}) == a);
  c.insert(kb);
  Multiset<Key> only_a;
  only_a.insert(ka);
  CHECK(multiset_intersect(std::vector{only_a, c}).empty());
}

TEST_CASE("pair3 examples") {
  CHECK(objective_pair3(cs("1,1,1")) == 0);
  CHECK(objective_pair3(cs("2,2,9;9,2,2;1,1,2;2,1,1")) == make_rational(1, 4));
  CHECK(objective_pair3(cs("1,1,2;2,1,1")) == 0);
  CHECK_THROWS_AS(objective_pair3(cs("1,1")), Error);
}

TEST_CASE("general examples") {
  CHECK(objective_general(2, cs("3,5")) == 1);
  CHECK(objective_general(3, cs("1,1,1")) == 0);
  CHECK(Objective::general(3).terms().size() == 4);
  CHECK(Objective::general(4).terms().size() == 10);
  CHECK_THROWS_AS(objective_general(4, cs("1,1,1")), Error);
}

TEST_CASE("chain examples") {
  CHECK(objective_chain(cs("1,1;2,2;4,4;8,8")) == make_rational(3, 4));
  CHECK(objective_chain(cs("3;9;9")) == 1);
  CHECK(objective_chain(cs("1,2")) == 0);
}

TEST_CASE("sequence examples") {
  CHECK(objective_sequence(seq({4, 4, 4, 4, 4})) == 0);
  CHECK(objective_sequence(seq({1, 1, 1})) == 0);
  CHECK_THROWS_AS(objective_sequence(seq({1, 2})), Error);
  const auto a = seq({1, 2, 1, 2, 3, 1, 2});
  std::vector<BigInt> scaled;
  for (const auto& v : a) scaled.push_back(v * 5);
  CHECK(objective_sequence(a) == objective_sequence(scaled));
}

TEST_CASE("objectives agree with naive evaluators") {
  testing::Rng rng(17);
  std::uniform_int_distribution<std::int64_t> coord(1, 9);
  for (int i = 0; i < 300; ++i) {
    const std::size_t d = 1 + rng() % 4;
    const std::size_t rows = 1 + rng() % 6;
    std::vector<std::vector<std::int64_t>> v(rows, std::vector<std::int64_t>(d));
    for (auto& r : v) for (auto& c : r) c = coord(rng);
    const auto set = testing::to_candidate_set(d, v);
    CHECK(objective_chain(set) == testing::naive_chain(d, v));
    if (d >= 2) CHECK(objective_general(d, set) == testing::naive_general(d, v));
    if (d == 3) {
      CHECK(objective_pair3(set) == testing::naive_pair3(v));
      CHECK(objective_general(3, set) <= objective_pair3(set));
    }
    std::vector<std::int64_t> a(3 + rng() % 4);
    for (auto& x : a) x = coord(rng);
    std::vector<BigInt> ab;
    for (auto x : a) ab.emplace_back(static_cast<long>(x));
    CHECK(objective_sequence(ab) == testing::naive_sequence(a));
  }
}

TEST_CASE("row permutation and scaling invariance") {
  testing::Rng rng(23);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::vector<std::int64_t>> v(5, std::vector<std::int64_t>(3));
    for (auto& r : v) for (auto& c : r) c = 1 + static_cast<std::int64_t>(rng() % 4);
    auto p = v;
    std::shuffle(p.begin(), p.end(), rng);
    auto s = v;
    for (auto& r : s) for (auto& c : r) c *= 3;
    const auto base = objective_pair3(testing::to_candidate_set(3, v));
    CHECK(objective_pair3(testing::to_candidate_set(3, p)) == base);
    CHECK(objective_pair3(testing::to_candidate_set(3, s)) == base);
    CHECK(base >= 0);
    CHECK(base <= 1);
  }
}

TEST_CASE("matched rows never exceed the weak intersection") {
  testing::Rng rng(29);
  for (int i = 0; i < 100; ++i) {
    std::vector<std::vector<std::int64_t>> v(4, std::vector<std::int64_t>(2));
    for (auto& r : v) for (auto& c : r) c = 1 + static_cast<std::int64_t>(rng() % 3);
    const auto set = testing::to_candidate_set(2, v);
    CHECK(objective_chain(set, IntersectionMode::MatchedRows) <= objective_chain(set));
  }
  CHECK(objective_chain(cs("1,1;2,2;4,4;8,8"), IntersectionMode::MatchedRows) == 0);
  CHECK(objective_general(2, cs("1,2;3,4"), IntersectionMode::MatchedRows) == 1);
}

TEST_CASE("objective names") {
  CHECK(Objective::parse("general(4)", 0).id() == "general(4)");
  CHECK(Objective::parse("chain", 2).id() == "chain(2)");
  CHECK(Objective::pair3().id() == "pair3");
  CHECK_THROWS_AS(Objective::parse("nope", 2), Error);
}

TEST_CASE("appending a row moves the intersection by at most the number of terms") {
  testing::Rng rng(37);
  const auto objective = Objective::general(4);
  for (int i = 0; i < 100; ++i) {
    std::vector<std::vector<std::int64_t>> v(1 + rng() % 5, std::vector<std::int64_t>(4));
    for (auto& r : v) for (auto& c : r) c = 1 + static_cast<std::int64_t>(rng() % 4);
    const auto before = evaluate(objective, testing::to_candidate_set(4, v)) * static_cast<long>(v.size());
    v.push_back({1 + static_cast<std::int64_t>(rng() % 4), 2, 2, 1});
    const auto after = evaluate(objective, testing::to_candidate_set(4, v)) * static_cast<long>(v.size());
    CHECK(abs(Rational(after - before)) <= static_cast<long>(objective.terms().size()));
  }
}
