#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "symcone/genfunc.hpp"
#include "symcone/oracle.hpp"

using namespace symcone;
using namespace symcone::oracle;

namespace {

IntVector iv(std::initializer_list<Index> vals) {
  IntVector v(static_cast<Index>(vals.size()));
  Index i = 0;
  for (Index x : vals) v(i++) = x;
  return v;
}

conegeom::ConeSpec spec(Kind k, Index n, std::initializer_list<Index> a) {
  conegeom::ConeSpec s;
  s.kind = k;
  s.n = n;
  s.a = iv(a);
  return s;
}

std::vector<Index> lambdas(const LecturePartition& p) {
  return {p.lambda.data(), p.lambda.data() + p.lambda.size()};
}

}  // namespace

TEST_CASE("brute-force counts of small cones") {
  const auto b3 = spec(Kind::B, 3, {1, 1});
  const auto s = oracle_series(b3, conegeom::grading_weights(b3), 3);
  CHECK(s.dense() == std::vector<BigInt>{1, 5, 13, 25});

  const auto a2 = spec(Kind::A, 2, {0, 1});
  CHECK(oracle_series(a2, conegeom::grading_weights(a2), 4).dense() ==
        std::vector<BigInt>{1, 2, 3, 4, 5});
}

TEST_CASE("oracle agrees with the expansion route") {
  for (const auto& s : {spec(Kind::A, 3, {-1, 0, 2}), spec(Kind::B, 3, {2, 4}),
                        spec(Kind::D, 3, {0, 1})}) {
    const IntVector w = conegeom::grading_weights(s);
    const auto counted = oracle_series(s, w, 8);
    const auto expanded = genfunc::expand(genfunc::build_general(s), w, 8);
    CHECK(series::first_mismatch(counted, expanded) == -1);
  }
}

TEST_CASE("oracle guards its inputs") {
  const auto b2 = spec(Kind::B, 2, {1});
  CHECK_THROWS_AS(oracle_series(b2, iv({1, 1}), 3), std::invalid_argument);
  CHECK_THROWS_AS(oracle_series(spec(Kind::D, 3, {1, 1}), iv({0, 0, 1}), 3),
                  ExpansionError);  // non-salient
  CHECK_THROWS_AS(oracle_series(spec(Kind::B, 3, {2, 1}), iv({0, 0, 1}), 3),
                  SpecError);
}

TEST_CASE("lecture hall chain condition via cross-multiplication") {
  CHECK(is_lecture_hall(iv({0, 0, 0})));
  CHECK(is_lecture_hall(iv({1, 2})));
  CHECK(is_lecture_hall(iv({1, 2, 3})));
  CHECK_FALSE(is_lecture_hall(iv({2, 3})));  // 2/1 > 3/2
  CHECK_FALSE(is_lecture_hall(iv({-1, 0})));
  CHECK(is_lecture_hall(iv({1, 3, 5})));
  CHECK_FALSE(is_lecture_hall(iv({1, 3, 4})));  // 3/2 > 4/3
  CHECK_THROWS_AS(LecturePartition(iv({2, 3})), std::invalid_argument);
  CHECK_NOTHROW(LecturePartition(iv({1, 2})));
}

TEST_CASE("lecture hall enumeration is complete and lexicographic") {
  const auto two = enumerate_lecture_hall(2, 2);
  REQUIRE(two.size() == 4);
  CHECK(lambdas(two[0]) == std::vector<Index>{0, 0});
  CHECK(lambdas(two[1]) == std::vector<Index>{0, 1});
  CHECK(lambdas(two[2]) == std::vector<Index>{0, 2});
  CHECK(lambdas(two[3]) == std::vector<Index>{1, 2});

  // Against a direct filter of the full box.
  for (Index cap = 0; cap <= 6; ++cap) {
    std::set<std::vector<Index>> brute;
    for (Index l1 = 0; l1 <= cap; ++l1)
      for (Index l2 = 0; l2 <= cap; ++l2)
        for (Index l3 = 0; l3 <= cap; ++l3)
          if (is_lecture_hall(iv({l1, l2, l3}))) brute.insert({l1, l2, l3});
    const auto fast = enumerate_lecture_hall(3, cap);
    CHECK(fast.size() == brute.size());
    std::set<std::vector<Index>> got;
    for (const auto& p : fast) got.insert(lambdas(p));
    CHECK(got == brute);
  }
}

TEST_CASE("ceiling statistics") {
  CHECK(lh_stat1(LecturePartition(iv({1, 2}))) == 2);
  CHECK(lh_stat2(LecturePartition(iv({1, 2}))) == 6);
  CHECK(lh_stat1(LecturePartition(iv({0, 3}))) == 1);
  CHECK(lh_stat2(LecturePartition(iv({0, 3}))) == 4);
  CHECK(lh_stat1(LecturePartition(iv({0, 0}))) == 0);
  CHECK(lh_stat2(LecturePartition(iv({0, 0}))) == 0);
}

TEST_CASE("weighted lecture hall series on the worked example") {
  const auto s = lecture_hall_weighted_series(2, iv({2, 4}), 14);
  const auto c = s.dense();
  CHECK(c == std::vector<BigInt>{1, 0, 0, 0, 4, 0, 4, 0, 4, 0, 8, 0, 8, 0, 8});
}

TEST_CASE("weighted series needs a positive top weight") {
  CHECK_THROWS_AS(lecture_hall_weighted_series(2, iv({2, 0}), 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(lecture_hall_weighted_series(2, iv({-1, 2}), 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(lecture_hall_weighted_series(2, iv({2}), 5),
                  std::invalid_argument);
}

TEST_CASE("enumeration grows monotonically with the cap") {
  auto keys = [](const std::vector<LecturePartition>& ps) {
    std::set<std::vector<Index>> out;
    for (const auto& p : ps) out.insert(lambdas(p));
    return out;
  };
  const auto small = keys(enumerate_lecture_hall(3, 4));
  const auto large = keys(enumerate_lecture_hall(3, 7));
  for (const auto& k : small) CHECK(large.count(k) == 1);
}
