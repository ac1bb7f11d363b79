#include "symcone/genfunc.hpp"

#include <algorithm>

#include "symcone/coxeter.hpp"
#include "symcone/parallel.hpp"

namespace symcone::genfunc {

RationalSum build_general(const conegeom::ConeSpec& spec) {
  conegeom::validate(spec);
  const Index n = spec.n;
  const IntMatrix b = conegeom::generator_matrix(spec);
  RationalSum sum;
  sum.dimension = n;
  for (const auto& g : coxeter::enumerate_group(spec.kind, spec.letters())) {
    RationalTerm term;
    term.numerator = IntVector::Zero(n);
    term.denominators.reserve(static_cast<std::size_t>(n));
    for (Index j = 0; j < n; ++j)
      term.denominators.push_back(coxeter::apply(g, IntVector(b.col(j))));
    for (Index j : coxeter::descent_set(g))
      term.numerator += term.denominators[static_cast<std::size_t>(j - 1)];
    sum.terms.push_back(std::move(term));
  }
  return sum;
}

RationalSum build_typeA(const conegeom::ConeSpec& spec) {
  conegeom::validate(spec);
  if (spec.kind != Kind::A) throw std::invalid_argument("build_typeA: wrong kind");
  const Index n = spec.n;
  RationalSum sum;
  sum.dimension = n;
  for (const auto& g : coxeter::enumerate_group(Kind::A, n)) {
    RationalTerm term;
    term.numerator = IntVector::Zero(n);
    Index prefix = 0;  // a_1 + ... + a_j
    for (Index j = 1; j < n; ++j) {
      prefix += spec.a(j - 1);
      // (z_{pi(1)} ... z_{pi(j)}) * (z_1 ... z_n)^{-prefix}
      IntVector v = IntVector::Constant(n, -prefix);
      for (Index i = 1; i <= j; ++i) v(g.pi(i - 1) - 1) += 1;
      term.denominators.push_back(std::move(v));
    }
    term.denominators.push_back(IntVector::Ones(n));
    for (Index j : coxeter::descent_set(g))
      term.numerator += term.denominators[static_cast<std::size_t>(j - 1)];
    sum.terms.push_back(std::move(term));
  }
  return sum;
}

RationalSum build_typeB(const conegeom::ConeSpec& spec) {
  conegeom::validate(spec);
  if (spec.kind != Kind::B) throw std::invalid_argument("build_typeB: wrong kind");
  const Index n = spec.n;
  RationalSum sum;
  sum.dimension = n;
  for (const auto& g : coxeter::enumerate_group(Kind::B, n - 1)) {
    RationalTerm term;
    term.numerator = IntVector::Zero(n);
    for (Index j = 1; j < n; ++j) {
      // prod_{i=j..n-1} z_{pi(i)}^{eps_i} z_n^{a_i}
      IntVector v = IntVector::Zero(n);
      for (Index i = j; i < n; ++i) {
        v(g.pi(i - 1) - 1) += g.eps(i - 1);
        v(n - 1) += spec.a(i - 1);
      }
      term.denominators.push_back(std::move(v));
    }
    IntVector last = IntVector::Zero(n);
    last(n - 1) = 1;
    term.denominators.push_back(std::move(last));
    for (Index j : coxeter::descent_set(g))
      term.numerator += term.denominators[static_cast<std::size_t>(j - 1)];
    sum.terms.push_back(std::move(term));
  }
  return sum;
}

RationalSum build_typeD(const conegeom::ConeSpec& spec) {
  conegeom::validate(spec);
  if (spec.kind != Kind::D) throw std::invalid_argument("build_typeD: wrong kind");
  const Index n = spec.n;
  RationalSum sum;
  sum.dimension = n;
  for (const auto& g : coxeter::enumerate_group(Kind::D, n - 1)) {
    RationalTerm term;
    term.numerator = IntVector::Zero(n);
    for (Index j = 1; j < n; ++j) {
      // (z_{pi(1)}^{-eps_1} z_n^{-a_1})^{[j=2]}
      //   * (prod_{i=j..n-1} z_{pi(i)}^{eps_i} z_n^{a_i})^{1+[j>=3]}
      const Index scale = j >= 3 ? 2 : 1;
      IntVector v = IntVector::Zero(n);
      for (Index i = j; i < n; ++i) {
        v(g.pi(i - 1) - 1) += scale * g.eps(i - 1);
        v(n - 1) += scale * spec.a(i - 1);
      }
      if (j == 2) {
        v(g.pi(0) - 1) -= g.eps(0);
        v(n - 1) -= spec.a(0);
      }
      term.denominators.push_back(std::move(v));
    }
    IntVector last = IntVector::Zero(n);
    last(n - 1) = 1;
    term.denominators.push_back(std::move(last));
    for (Index j : coxeter::descent_set(g))
      term.numerator += term.denominators[static_cast<std::size_t>(j - 1)];
    sum.terms.push_back(std::move(term));
  }
  return sum;
}

RationalSum build_typed(const conegeom::ConeSpec& spec) {
  switch (spec.kind) {
    case Kind::A: return build_typeA(spec);
    case Kind::B: return build_typeB(spec);
    case Kind::D: return build_typeD(spec);
  }
  throw std::invalid_argument("build_typed: unknown kind");
}

RationalSum specialize(const RationalSum& sum, const IntVector& weights) {
  if (weights.size() != sum.dimension)
    throw std::invalid_argument("specialize: weight dimension mismatch");
  RationalSum out;
  out.dimension = 1;
  out.terms.reserve(sum.terms.size());
  for (std::size_t t = 0; t < sum.terms.size(); ++t) {
    const RationalTerm& term = sum.terms[t];
    RationalTerm s;
    s.numerator = IntVector::Constant(1, term.numerator.dot(weights));
    for (const auto& den : term.denominators) {
      const Index e = den.dot(weights);
      if (e == 0)
        throw ExpansionError("denominator specializes to exponent zero in term " +
                             std::to_string(t));
      s.denominators.push_back(IntVector::Constant(1, e));
    }
    out.terms.push_back(std::move(s));
  }
  return out;
}

namespace {

// Dense coefficients over the degree window [lo, truncation].
struct Window {
  Index lo = 0;
  Index truncation = -1;
  std::vector<BigInt> c;

  static Window empty() { return Window{}; }

  void merge(Window&& o) {
    if (o.truncation < 0) return;
    if (truncation < 0) {
      *this = std::move(o);
      return;
    }
    if (o.lo < lo) {
      c.insert(c.begin(), static_cast<std::size_t>(lo - o.lo), BigInt(0));
      lo = o.lo;
    }
    for (Index d = o.lo; d <= o.truncation; ++d)
      c[static_cast<std::size_t>(d - lo)] += o.c[static_cast<std::size_t>(d - o.lo)];
  }
};

Window expand_term(const RationalTerm& term, Index truncation, std::size_t index) {
  const Index e0 = term.numerator(0);
  Window w;
  w.lo = std::min<Index>(0, e0);
  w.truncation = truncation;
  if (e0 > truncation) {
    // Nothing in range; keep an all-zero window for the merge.
    w.c.assign(static_cast<std::size_t>(truncation - w.lo) + 1, BigInt(0));
    return w;
  }
  w.c.assign(static_cast<std::size_t>(truncation - w.lo) + 1, BigInt(0));
  w.c[static_cast<std::size_t>(e0 - w.lo)] = 1;
  for (const auto& den : term.denominators) {
    const Index e = den(0);
    if (e <= 0)
      throw ExpansionError("nonpositive denominator exponent " + std::to_string(e) +
                           " in term " + std::to_string(index));
    for (Index d = w.lo + e; d <= truncation; ++d)
      w.c[static_cast<std::size_t>(d - w.lo)] += w.c[static_cast<std::size_t>(d - e - w.lo)];
  }
  return w;
}

}  // namespace

series::TruncatedSeries expand(const RationalSum& sum, Index truncation) {
  if (sum.dimension != 1)
    throw std::invalid_argument("expand: specialize the sum to one variable first");
  if (truncation < 0) throw std::invalid_argument("expand: negative truncation");

  Window total = parallel::map_reduce(
      static_cast<Index>(sum.terms.size()), Window::empty(),
      [&](Index t) {
        return expand_term(sum.terms[static_cast<std::size_t>(t)], truncation,
                           static_cast<std::size_t>(t));
      },
      [](Window& acc, Window&& part) { acc.merge(std::move(part)); });

  series::TruncatedSeries out;
  out.truncation = truncation;
  if (total.truncation < 0) return out;  // zero terms
  for (Index d = total.lo; d < 0; ++d)
    if (total.c[static_cast<std::size_t>(d - total.lo)] != 0)
      throw ExpansionError("negative-degree coefficient fails to cancel at degree " +
                           std::to_string(d));
  for (Index d = 0; d <= truncation; ++d)
    out.add_coeff(d, total.c[static_cast<std::size_t>(d - total.lo)]);
  return out;
}

series::TruncatedSeries expand(const RationalSum& sum, const IntVector& weights,
                               Index truncation) {
  return expand(specialize(sum, weights), truncation);
}

}  // namespace symcone::genfunc
