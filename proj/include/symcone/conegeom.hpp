#pragma once

#include <functional>
#include <vector>

#include "symcone/coxeter.hpp"
#include "symcone/types.hpp"

namespace symcone::conegeom {

// A group-invariant simplicial cone family in R^n, cut out by one linear
// inequality per group element. The weight vector a is normalized so that
// distinct specs give distinct cones:
//   kind A: length n, ascending, sum 1      (inequalities sum_i a_i x_{pi(i)} >= 0)
//   kind B: length n-1, 0 <= a ascending, a_{n-1} != 0
//                              (inequalities sum_i eps_i a_i x_{pi(i)} <= x_n)
//   kind D: length n-1, |a_1| <= a_2 <= ... <= a_{n-1} != 0, n >= 3
//                              (same inequalities, evenly many sign changes)
struct ConeSpec {
  Kind kind = Kind::A;
  Index n = 0;
  IntVector a;

  // Rank of the acting group (letters of its elements).
  Index letters() const { return kind == Kind::A ? n : n - 1; }
};

void validate(const ConeSpec& spec);  // throws SpecError

// Facet description A of the fundamental chamber piece C+ = {x : Ax >= 0}.
// Row j < n is the wall of the j-th simple reflection, row n the defining
// weight inequality.
IntMatrix facet_matrix(const ConeSpec& spec);

// Primitive generator matrix B, column j spanning the j-th extreme ray of
// C+. Satisfies facet_matrix * B = diag(1,..,1) for kinds A and B and
// diag(2,..,2,1) for kind D, whose lattice is
// Gamma = {x in Z^n : x_1 = ... = x_{n-1} mod 2}.
IntMatrix generator_matrix(const ConeSpec& spec);

// Grading under which series are expanded: total degree for kind A, the
// last coordinate for kinds B and D.
IntVector grading_weights(const ConeSpec& spec);

// Reference membership test: evaluates the defining inequality for every
// group element.
bool membership(const ConeSpec& spec, const IntVector& x);

// Same predicate via the rearrangement bound (kinds A, B) or a per-
// permutation sign-parity maximum (kind D). Used in enumeration hot loops.
bool membership_fast(const ConeSpec& spec, const IntVector& x);

// x in C+ (all facet inequalities hold).
bool in_fundamental_cone(const ConeSpec& spec, const IntVector& x);

// Whether the j-th simple reflection (1-based, j < n) fixes y.
bool fixed_by_simple(Kind kind, Index n, Index j, const IntVector& y);

// Every generator has strictly positive grading. Kinds A and B are salient
// for all valid weights; kind D can fail (the cone then contains a line and
// no expansion exists).
bool is_salient(const ConeSpec& spec);
void require_salient(const ConeSpec& spec);  // throws ExpansionError

// Half-width per unit of grading of a box that is guaranteed to contain
// every cone point: free coordinates of a grading-d point lie in
// [-d*h, d*h].
Index enumeration_halfwidth(const ConeSpec& spec);

// Visits every lattice point of the cone (Z^n, or Gamma for kind D) with
// grading exactly d, in lexicographic coordinate order.
void for_each_cone_point(const ConeSpec& spec, Index d,
                         const std::function<void(const IntVector&)>& fn);

struct TriangulationViolation {
  IntVector point;
  Index cover_count = 0;
};

struct TriangulationReport {
  Index points_checked = 0;
  std::vector<TriangulationViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Exhaustively verifies that every cone lattice point with grading <= bound
// lies in exactly one translated chamber piece sigma * C_{D(sigma)}, where
// C_J drops the walls of the reflections indexed by J.
TriangulationReport triangulation_check(const ConeSpec& spec, Index bound);

// Exact integer determinant (fraction-free elimination).
BigInt integer_determinant(IntMatrix m);

}  // namespace symcone::conegeom
