#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "symcone/conegeom.hpp"

using namespace symcone;
using namespace symcone::conegeom;

namespace {

IntVector iv(std::initializer_list<Index> vals) {
  IntVector v(static_cast<Index>(vals.size()));
  Index i = 0;
  for (Index x : vals) v(i++) = x;
  return v;
}

ConeSpec spec(Kind k, Index n, std::initializer_list<Index> a) {
  ConeSpec s;
  s.kind = k;
  s.n = n;
  s.a = iv(a);
  return s;
}

// Valid weight vectors used by the property sweeps below.
const std::vector<ConeSpec>& sample_specs() {
  static const std::vector<ConeSpec> all = {
      spec(Kind::A, 2, {0, 1}),        spec(Kind::A, 3, {-1, 1, 1}),
      spec(Kind::A, 3, {-1, 0, 2}),    spec(Kind::A, 4, {-1, -1, 1, 2}),
      spec(Kind::B, 2, {1}),           spec(Kind::B, 3, {1, 1}),
      spec(Kind::B, 3, {2, 4}),        spec(Kind::B, 4, {0, 1, 2}),
      spec(Kind::D, 3, {0, 1}),        spec(Kind::D, 3, {-1, 2}),
      spec(Kind::D, 4, {0, 1, 1}),     spec(Kind::D, 4, {-1, 1, 2}),
  };
  return all;
}

}  // namespace

TEST_CASE("validate accepts normalized weights and rejects the rest") {
  for (const auto& s : sample_specs()) CHECK_NOTHROW(validate(s));

  CHECK_THROWS_AS(validate(spec(Kind::A, 1, {1})), SpecError);
  CHECK_THROWS_AS(validate(spec(Kind::A, 2, {1, 0})), SpecError);   // not ascending
  CHECK_THROWS_AS(validate(spec(Kind::A, 2, {0, 0})), SpecError);   // sum != 1
  CHECK_THROWS_AS(validate(spec(Kind::A, 3, {0, 1})), SpecError);   // wrong length
  CHECK_THROWS_AS(validate(spec(Kind::B, 2, {0})), SpecError);      // top weight zero
  CHECK_THROWS_AS(validate(spec(Kind::B, 3, {-1, 2})), SpecError);  // negative entry
  CHECK_THROWS_AS(validate(spec(Kind::B, 3, {2, 1})), SpecError);   // not ascending
  CHECK_THROWS_AS(validate(spec(Kind::D, 2, {1})), SpecError);      // rank too small
  CHECK_THROWS_AS(validate(spec(Kind::D, 3, {-2, 1})), SpecError);  // |a_1| > a_2
  CHECK_THROWS_AS(validate(spec(Kind::D, 3, {0, 0})), SpecError);   // top weight zero

  ConeSpec big;
  big.kind = Kind::A;
  big.n = 17;
  big.a = IntVector::Zero(17);
  big.a(16) = 1;
  CHECK_THROWS_AS(validate(big), SpecError);  // dimension cap
}

TEST_CASE("generator matrices on worked examples") {
  const IntMatrix ga = generator_matrix(spec(Kind::A, 2, {0, 1}));
  CHECK(same_vector(ga.col(0), iv({1, 0})));
  CHECK(same_vector(ga.col(1), iv({1, 1})));

  const IntMatrix gb = generator_matrix(spec(Kind::B, 3, {1, 1}));
  CHECK(same_vector(gb.col(0), iv({1, 1, 2})));
  CHECK(same_vector(gb.col(1), iv({0, 1, 1})));
  CHECK(same_vector(gb.col(2), iv({0, 0, 1})));

  const IntMatrix gb2 = generator_matrix(spec(Kind::B, 3, {2, 4}));
  CHECK(same_vector(gb2.col(0), iv({1, 1, 6})));
  CHECK(same_vector(gb2.col(1), iv({0, 1, 4})));
  CHECK(same_vector(gb2.col(2), iv({0, 0, 1})));

  const IntMatrix gd = generator_matrix(spec(Kind::D, 3, {0, 1}));
  CHECK(same_vector(gd.col(0), iv({1, 1, 1})));
  CHECK(same_vector(gd.col(1), iv({-1, 1, 1})));
  CHECK(same_vector(gd.col(2), iv({0, 0, 1})));
}

TEST_CASE("facet matrix times generator matrix is the expected diagonal") {
  for (const auto& s : sample_specs()) {
    const IntMatrix prod = facet_matrix(s) * generator_matrix(s);
    for (Index i = 0; i < s.n; ++i)
      for (Index j = 0; j < s.n; ++j) {
        Index expect = 0;
        if (i == j) expect = (s.kind == Kind::D && i < s.n - 1) ? 2 : 1;
        CHECK(prod(i, j) == expect);
      }
  }
}

TEST_CASE("generator determinants match the lattice index") {
  for (const auto& s : sample_specs()) {
    BigInt expect = 1;
    if (s.kind == Kind::D)
      expect = BigInt(1) << static_cast<unsigned>(s.n - 2);
    BigInt det = integer_determinant(generator_matrix(s));
    if (det < 0) det = -det;
    CHECK(det == expect);
  }
}

TEST_CASE("kind D generators lie in the congruence lattice") {
  for (const auto& s : sample_specs()) {
    if (s.kind != Kind::D) continue;
    const IntMatrix g = generator_matrix(s);
    for (Index j = 0; j < s.n; ++j)
      for (Index i = 1; i < s.n - 1; ++i)
        CHECK(((g(i, j) - g(0, j)) & 1) == 0);
  }
}

TEST_CASE("each generator lies on every wall except its own") {
  for (const auto& s : sample_specs()) {
    const IntMatrix g = generator_matrix(s);
    for (Index j = 1; j < s.n; ++j)
      for (Index i = 1; i < s.n; ++i)
        CHECK(fixed_by_simple(s.kind, s.n, i, g.col(j - 1)) == (i != j));
  }
}

TEST_CASE("generators are cone members with positive grading") {
  for (const auto& s : sample_specs()) {
    const IntMatrix g = generator_matrix(s);
    const IntVector w = grading_weights(s);
    for (Index j = 0; j < s.n; ++j) {
      CHECK(membership(s, g.col(j)));
      CHECK(in_fundamental_cone(s, g.col(j)));
      CHECK(w.dot(g.col(j)) > 0);
    }
  }
}

TEST_CASE("membership on worked examples") {
  const auto a2 = spec(Kind::A, 2, {0, 1});
  CHECK(membership(a2, iv({3, 5})));
  CHECK_FALSE(membership(a2, iv({-1, 5})));

  const auto a3 = spec(Kind::A, 3, {-1, 1, 1});
  CHECK(membership(a3, iv({1, 1, 1})));
  CHECK(membership(a3, iv({2, 2, 1})));
  CHECK_FALSE(membership(a3, iv({2, 1, 0})));

  const auto b3 = spec(Kind::B, 3, {2, 4});
  CHECK(membership(b3, iv({1, 1, 6})));
  CHECK(membership(b3, iv({-1, 1, 6})));
  CHECK_FALSE(membership(b3, iv({1, 0, 1})));

  const auto d3 = spec(Kind::D, 3, {0, 1});
  CHECK(membership(d3, iv({2, -2, 2})));
  CHECK_FALSE(membership(d3, iv({1, 3, 2})));
}

TEST_CASE("fast membership agrees with the group sweep") {
  for (const auto& s : sample_specs()) {
    IntVector x(s.n);
    // Deterministic pseudo-random walk over small coordinates.
    std::uint64_t state = 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(s.n) +
                          (s.kind == Kind::A ? 0 : s.kind == Kind::B ? 1000 : 2000);
    for (int trial = 0; trial < 400; ++trial) {
      for (Index i = 0; i < s.n; ++i) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        x(i) = static_cast<Index>((state >> 33) % 13) - 6;
      }
      CHECK(membership(s, x) == membership_fast(s, x));
    }
  }
}

TEST_CASE("saliency") {
  for (const auto& s : sample_specs()) {
    CHECK(is_salient(s));
    CHECK_NOTHROW(require_salient(s));
  }
  // Weight (1,1) puts a generator on the grading hyperplane: the cone
  // contains the line spanned by (1,-1,0) and has no series expansion.
  const auto flat = spec(Kind::D, 3, {1, 1});
  CHECK_FALSE(is_salient(flat));
  CHECK_THROWS_AS(require_salient(flat), ExpansionError);
}

TEST_CASE("point enumeration counts low degrees of known series") {
  auto count = [](const ConeSpec& s, Index d) {
    Index c = 0;
    for_each_cone_point(s, d, [&](const IntVector&) { ++c; });
    return c;
  };
  const auto b2 = spec(Kind::B, 2, {1});
  for (Index d = 0; d <= 6; ++d) CHECK(count(b2, d) == 2 * d + 1);
  const auto a2 = spec(Kind::A, 2, {0, 1});
  for (Index d = 0; d <= 6; ++d) CHECK(count(a2, d) == d + 1);
  const auto d3 = spec(Kind::D, 3, {0, 1});
  CHECK(count(d3, 0) == 1);
  CHECK(count(d3, 1) == 5);
  CHECK(count(d3, 2) == 13);
}

TEST_CASE("point enumeration yields distinct members of the right grading") {
  for (const auto& s : sample_specs()) {
    const IntVector w = grading_weights(s);
    for (Index d = 0; d <= 3; ++d) {
      std::set<std::vector<Index>> seen;
      for_each_cone_point(s, d, [&](const IntVector& x) {
        CHECK(membership_fast(s, x));
        CHECK(w.dot(x) == d);
        std::vector<Index> key(x.data(), x.data() + x.size());
        CHECK(seen.insert(key).second);
        if (s.kind == Kind::D)
          for (Index i = 1; i < s.n - 1; ++i) CHECK(((x(i) - x(0)) & 1) == 0);
      });
    }
  }
}

TEST_CASE("triangulation covers every point exactly once") {
  const auto r1 = triangulation_check(spec(Kind::B, 2, {1}), 3);
  CHECK(r1.points_checked == 16);  // 1 + 3 + 5 + 7
  CHECK(r1.ok());

  const auto r2 = triangulation_check(spec(Kind::A, 3, {-1, 1, 1}), 4);
  CHECK(r2.points_checked > 0);
  CHECK(r2.ok());

  const auto r3 = triangulation_check(spec(Kind::D, 3, {0, 1}), 4);
  CHECK(r3.points_checked == 1 + 5 + 13 + 25 + 41);
  CHECK(r3.ok());
}

TEST_CASE("integer determinant is exact") {
  IntMatrix m(2, 2);
  m << 0, 1, 1, 0;
  CHECK(integer_determinant(m) == -1);

  IntMatrix p(3, 3);
  p << 2, 3, 5, 7, 11, 13, 17, 19, 23;
  CHECK(integer_determinant(p) == -78);

  IntMatrix s(2, 2);
  s << 1, 2, 2, 4;
  CHECK(integer_determinant(s) == 0);

  IntMatrix one(1, 1);
  one << 5;
  CHECK(integer_determinant(one) == 5);

  // Entries big enough that naive expansion would overflow 64-bit partials.
  IntMatrix big = IntMatrix::Zero(4, 4);
  for (Index i = 0; i < 4; ++i) big(i, i) = 2000000000;
  big(0, 3) = 1;
  big(3, 0) = 1;
  // (4e18 - 1) * 4e18: the off-diagonal pair shaves one off the 2x2 minor.
  CHECK(integer_determinant(big) == BigInt("15999999999999999996000000000000000000"));
}
