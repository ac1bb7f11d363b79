#pragma once

#include <array>
#include <map>

#include "symcone/series.hpp"
#include "symcone/types.hpp"

namespace symcone::poly {

// Sparse polynomial in one variable with big-integer coefficients.
struct QPolynomial {
  std::map<Index, BigInt> terms;

  static QPolynomial one() { return QPolynomial{{{0, 1}}}; }

  void add_term(Index deg, const BigInt& c) {
    if (c == 0) return;
    BigInt& v = terms[deg];
    v += c;
    if (v == 0) terms.erase(deg);
  }
  const BigInt& coeff(Index deg) const {
    static const BigInt zero = 0;
    auto it = terms.find(deg);
    return it == terms.end() ? zero : it->second;
  }
  Index degree() const { return terms.empty() ? -1 : terms.rbegin()->first; }
  BigInt value_at_one() const {
    BigInt s = 0;
    for (const auto& [d, c] : terms) s += c;
    return s;
  }
  bool operator==(const QPolynomial& o) const { return terms == o.terms; }
};

inline QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial r = a;
  for (const auto& [d, c] : b.terms) r.add_term(d, c);
  return r;
}

inline QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial r;
  for (const auto& [da, ca] : a.terms)
    for (const auto& [db, cb] : b.terms) r.add_term(da + db, ca * cb);
  return r;
}

inline QPolynomial poly_pow(const QPolynomial& a, Index k) {
  QPolynomial r = QPolynomial::one();
  for (Index i = 0; i < k; ++i) r = r * a;
  return r;
}

inline series::TruncatedSeries to_series(const QPolynomial& p, Index truncation) {
  series::TruncatedSeries s;
  s.truncation = truncation;
  for (const auto& [d, c] : p.terms) {
    if (d < 0) throw std::invalid_argument("polynomial with negative degree is not a series");
    s.add_coeff(d, c);
  }
  return s;
}

// Sparse polynomial in D variables, keyed by multidegree.
template <int D>
struct MultiPoly {
  using Key = std::array<Index, D>;
  std::map<Key, BigInt> terms;

  static MultiPoly one() {
    MultiPoly p;
    p.terms[Key{}] = 1;
    return p;
  }
  void add_term(const Key& k, const BigInt& c) {
    if (c == 0) return;
    BigInt& v = terms[k];
    v += c;
    if (v == 0) terms.erase(k);
  }
  bool operator==(const MultiPoly& o) const { return terms == o.terms; }
};

// Product, dropping every monomial whose first-variable degree exceeds cap.
template <int D>
MultiPoly<D> mul_truncated(const MultiPoly<D>& a, const MultiPoly<D>& b, Index cap) {
  MultiPoly<D> r;
  for (const auto& [ka, ca] : a.terms) {
    if (ka[0] > cap) continue;
    for (const auto& [kb, cb] : b.terms) {
      typename MultiPoly<D>::Key k;
      for (int i = 0; i < D; ++i) k[static_cast<std::size_t>(i)] =
          ka[static_cast<std::size_t>(i)] + kb[static_cast<std::size_t>(i)];
      if (k[0] > cap) continue;
      r.add_term(k, ca * cb);
    }
  }
  return r;
}

// 1/(1 - monomial) truncated at first-variable degree cap; the monomial
// must have positive first-variable degree so the expansion terminates.
template <int D>
MultiPoly<D> geometric_truncated(const typename MultiPoly<D>::Key& monomial, Index cap) {
  if (monomial[0] <= 0)
    throw std::invalid_argument("geometric_truncated: first-variable degree must be positive");
  MultiPoly<D> r;
  typename MultiPoly<D>::Key k{};
  while (k[0] <= cap) {
    r.add_term(k, 1);
    for (int i = 0; i < D; ++i) k[static_cast<std::size_t>(i)] +=
        monomial[static_cast<std::size_t>(i)];
  }
  return r;
}

// Drops monomials with first-variable degree beyond cap.
template <int D>
MultiPoly<D> truncate_first(const MultiPoly<D>& a, Index cap) {
  MultiPoly<D> r;
  for (const auto& [k, c] : a.terms)
    if (k[0] <= cap) r.add_term(k, c);
  return r;
}

}  // namespace symcone::poly
