#include "symcone/identities.hpp"

#include <algorithm>
#include <sstream>

#include "symcone/coxeter.hpp"
#include "symcone/genfunc.hpp"
#include "symcone/oracle.hpp"

namespace symcone::identities {

using poly::MultiPoly;
using poly::QPolynomial;
using series::TruncatedSeries;

namespace {

VerifyResult pass(const std::string& what) { return {true, what}; }

VerifyResult fail(const std::string& what) { return {false, what}; }

VerifyResult compare_series(const TruncatedSeries& a, const TruncatedSeries& b,
                            const std::string& label) {
  const Index d = series::first_mismatch(a, b);
  if (d < 0) return pass(label + ": equal to truncation");
  std::ostringstream os;
  os << label << ": first mismatch at degree " << d << " (" << a.coeff(d) << " vs "
     << b.coeff(d) << ")";
  return fail(os.str());
}

template <int D>
VerifyResult compare_multi(const MultiPoly<D>& a, const MultiPoly<D>& b,
                           const std::string& label) {
  if (a == b) return pass(label + ": equal to truncation");
  // Report the smallest key where the two sides differ.
  for (const auto& [k, c] : a.terms) {
    auto it = b.terms.find(k);
    if (it == b.terms.end() || it->second != c) {
      std::ostringstream os;
      os << label << ": first mismatch at degree (";
      for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
      os << ")";
      return fail(os.str());
    }
  }
  for (const auto& [k, c] : b.terms) {
    if (!a.terms.count(k)) {
      std::ostringstream os;
      os << label << ": first mismatch at degree (";
      for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
      os << ")";
      return fail(os.str());
    }
  }
  return fail(label + ": mismatch");
}

conegeom::ConeSpec cube_spec(Index m) {
  conegeom::ConeSpec spec;
  spec.kind = Kind::B;
  spec.n = m + 1;
  spec.a = IntVector::Zero(m);
  spec.a(m - 1) = 1;
  return spec;
}

}  // namespace

QPolynomial q_bracket(Index k) { return q_bracket_scaled(k, 1); }

QPolynomial q_bracket_scaled(Index k, Index c) {
  if (k < 0) throw std::invalid_argument("q_bracket of negative integer");
  QPolynomial p;
  for (Index i = 0; i < k; ++i) p.add_term(c * i, 1);
  return p;
}

QPolynomial q_factorial(Index k) {
  QPolynomial p = QPolynomial::one();
  for (Index i = 1; i <= k; ++i) p = p * q_bracket(i);
  return p;
}

QPolynomial eulerian_B(Index m) {
  QPolynomial p;
  for (const auto& g : coxeter::enumerate_group(Kind::B, m))
    p.add_term(coxeter::stat_des(g), 1);
  return p;
}

QPolynomial comaj_distribution(Index m) {
  QPolynomial p;
  for (const auto& g : coxeter::enumerate_group(Kind::B, m))
    p.add_term(coxeter::stat_comaj(g), 1);
  return p;
}

VerifyResult verify_eulerian_identity(Index m, Index truncation) {
  // Right side: sum_k (2k+1)^m t^k.
  TruncatedSeries rhs;
  rhs.truncation = truncation;
  for (Index k = 0; k <= truncation; ++k) {
    BigInt v = 1;
    for (Index i = 0; i < m; ++i) v *= 2 * k + 1;
    rhs.add_coeff(k, v);
  }

  TruncatedSeries lhs = poly::to_series(eulerian_B(m), truncation);
  for (Index i = 0; i <= m; ++i) lhs = series::geometric_mul(lhs, 1);
  auto r1 = compare_series(lhs, rhs, "descent numerator route");
  if (!r1) return r1;

  const TruncatedSeries cube =
      oracle::oracle_series(cube_spec(m), conegeom::grading_weights(cube_spec(m)), truncation);
  auto r2 = compare_series(cube, rhs, "cube point-count route");
  if (!r2) return r2;
  return pass("both routes match sum (2k+1)^m t^k");
}

VerifyResult verify_comaj_closed_form(Index m) {
  const QPolynomial lhs = comaj_distribution(m);
  QPolynomial one_plus_t;
  one_plus_t.add_term(0, 1);
  one_plus_t.add_term(1, 1);
  const QPolynomial rhs = poly::poly_pow(one_plus_t, m) * q_factorial(m);
  if (!(lhs == rhs)) {
    for (Index d = 0; d <= std::max(lhs.degree(), rhs.degree()); ++d)
      if (lhs.coeff(d) != rhs.coeff(d)) {
        std::ostringstream os;
        os << "comaj distribution: first mismatch at degree " << d;
        return fail(os.str());
      }
  }
  BigInt order = 1;
  for (Index i = 1; i <= m; ++i) order *= 2 * i;
  if (lhs.value_at_one() != order) return fail("comaj distribution: wrong value at t = 1");
  return pass("matches (1+t)^m [m]_t! and group order at t = 1");
}

namespace {

// prod_{i=0..m} (1 - x q^i) as an (x, q) polynomial.
MultiPoly<2> staircase_product(Index m) {
  MultiPoly<2> p = MultiPoly<2>::one();
  for (Index i = 0; i <= m; ++i) {
    MultiPoly<2> f = MultiPoly<2>::one();
    f.add_term({1, i}, -1);
    p = poly::mul_truncated(p, f, m + 2);
  }
  return p;
}

// sum_{k<=N} ([k+1]_q + shift_q [k]_q)^m x^k, with shift 1 for the comajor
// form and 0 for the major form.
MultiPoly<2> bracket_power_sum(Index m, Index truncation, Index shift) {
  MultiPoly<2> s;
  for (Index k = 0; k <= truncation; ++k) {
    QPolynomial base = q_bracket(k + 1);
    QPolynomial second = q_bracket(k);
    for (auto& [d, c] : second.terms) base.add_term(d + shift, c);
    const QPolynomial powed = poly::poly_pow(base, m);
    for (const auto& [d, c] : powed.terms) s.add_term({k, d}, c);
  }
  return s;
}

}  // namespace

VerifyResult verify_joint_chow_gessel(Index m, Index truncation) {
  if (truncation < m) throw std::invalid_argument("truncation must reach x-degree m");
  MultiPoly<2> lhs_comaj, lhs_maj;
  for (const auto& g : coxeter::enumerate_group(Kind::B, m)) {
    lhs_comaj.add_term({coxeter::stat_des(g), coxeter::stat_comaj(g)}, 1);
    lhs_maj.add_term({coxeter::stat_des(g), coxeter::stat_maj(g)}, 1);
  }
  const MultiPoly<2> stair = staircase_product(m);
  const MultiPoly<2> rhs_comaj =
      poly::mul_truncated(stair, bracket_power_sum(m, truncation, 1), truncation);
  const MultiPoly<2> rhs_maj =
      poly::mul_truncated(stair, bracket_power_sum(m, truncation, 0), truncation);
  auto r1 = compare_multi(poly::truncate_first(lhs_comaj, truncation), rhs_comaj,
                          "comajor form");
  if (!r1) return r1;
  auto r2 = compare_multi(poly::truncate_first(lhs_maj, truncation), rhs_maj, "major form");
  if (!r2) return r2;
  return pass("joint descent/(co)major identities hold to x-degree " +
              std::to_string(truncation));
}

TruncatedSeries ehrhart_almost_constant(Index m, Index b, Index c, Index truncation) {
  if (m < 1 || b < 0 || c < 0 || (b == 0 && c == 0))
    throw std::invalid_argument("need m >= 1 and b, c >= 0 not both zero");
  if (b == 0) {
    QPolynomial num = q_bracket(c);
    QPolynomial f;
    f.add_term(0, 1);
    f.add_term(c, 1);
    num = num * poly::poly_pow(f, m);
    TruncatedSeries s = poly::to_series(num, truncation);
    for (Index i = 0; i <= m; ++i) s = series::geometric_mul(s, c);
    return s;
  }
  TruncatedSeries s;
  s.truncation = truncation;
  for (Index k = 0; b * k <= truncation; ++k) {
    QPolynomial base = q_bracket_scaled(k + 1, c);
    QPolynomial second = q_bracket_scaled(k, c);
    for (auto& [d, v] : second.terms) base.add_term(d + c, v);
    const QPolynomial powed = poly::poly_pow(base, m);
    for (const auto& [d, v] : powed.terms) s.add_coeff(d + b * k, v);
  }
  const QPolynomial bracket_b = q_bracket(b);
  TruncatedSeries out;
  out.truncation = truncation;
  for (const auto& [d, v] : bracket_b.terms)
    for (const auto& [e, w] : s.coefficients) out.add_coeff(d + e, v * w);
  return out;
}

namespace {

conegeom::ConeSpec almost_constant_spec(Index m, Index b, Index c) {
  conegeom::ConeSpec spec;
  spec.kind = Kind::B;
  spec.n = m + 1;
  spec.a = IntVector::Constant(m, c);
  spec.a(m - 1) = c + b;
  return spec;
}

}  // namespace

VerifyResult verify_almost_constant(Index m, Index b, Index c, Index truncation) {
  const TruncatedSeries closed = ehrhart_almost_constant(m, b, c, truncation);
  const conegeom::ConeSpec spec = almost_constant_spec(m, b, c);
  const IntVector w = conegeom::grading_weights(spec);
  const TruncatedSeries expanded = genfunc::expand(genfunc::build_typeB(spec), w, truncation);
  auto r1 = compare_series(closed, expanded, "closed form vs rational sum");
  if (!r1) return r1;
  const TruncatedSeries counted = oracle::oracle_series(spec, w, truncation);
  auto r2 = compare_series(closed, counted, "closed form vs point counts");
  if (!r2) return r2;
  return pass("closed form, rational sum and point counts agree");
}

VerifyResult verify_lecture_hall_corollary(Index n, Index d, Index c, Index b,
                                           Index truncation) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (d < 0 || b < 0 || c < -2 * d)
    throw std::invalid_argument("need d >= 0, b >= 0, c >= -2d");
  conegeom::ConeSpec spec;
  spec.kind = Kind::B;
  spec.n = n;
  spec.a = IntVector(n - 1);
  for (Index i = 1; i + 1 < n; ++i) spec.a(i - 1) = 2 * d * i + c;
  spec.a(n - 2) = 2 * d * (n - 1) + c + b;
  conegeom::validate(spec);

  const TruncatedSeries lhs =
      genfunc::expand(genfunc::build_typeB(spec), conegeom::grading_weights(spec), truncation);
  const TruncatedSeries rhs = series::geometric_mul(
      oracle::lecture_hall_weighted_series(n - 1, spec.a, truncation), 1);
  return compare_series(lhs, rhs, "cone series vs weighted lecture hall series");
}

VerifyResult verify_eqn_ps(Index n, Index truncation) {
  if (n < 1 || n > 3) throw std::invalid_argument("supported for 1 <= n <= 3");
  // Left side: enumerate sequences with l_n <= 2n*N (all larger ones exceed
  // x-degree N), collect (x, q, y) = (ceil(l_n/2n), stat1, stat2).
  MultiPoly<3> lhs;
  for (const auto& p : oracle::enumerate_lecture_hall(n, 2 * n * truncation)) {
    const Index x = (p.lambda(n - 1) + 2 * n - 1) / (2 * n);
    if (x > truncation) continue;
    lhs.add_term({x, oracle::lh_stat1(p), oracle::lh_stat2(p)}, 1);
  }

  MultiPoly<3> rhs;
  for (const auto& g : coxeter::enumerate_group(Kind::B, n))
    rhs.add_term({coxeter::stat_des(g), coxeter::stat_comaj(g), 2 * coxeter::stat_cobin(g)}, 1);
  rhs = poly::truncate_first(rhs, truncation);
  for (Index i = 0; i < n; ++i) {
    // 1 / (1 - x q^{n-i} y^{2((i+1)+...+n)})
    const Index ysum = (n * (n + 1)) / 2 - (i * (i + 1)) / 2;
    rhs = poly::mul_truncated(
        rhs, poly::geometric_truncated<3>({1, n - i, 2 * ysum}, truncation), truncation);
  }
  return compare_multi(lhs, rhs, "trivariate lecture hall refinement");
}

}  // namespace symcone::identities
