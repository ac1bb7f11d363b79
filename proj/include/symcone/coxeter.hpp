#pragma once

#include <string>
#include <vector>

#include "symcone/types.hpp"

namespace symcone::coxeter {

// Element of one of the three families on m letters, in one-line notation:
// pi(i) is the image of letter i+1 (values 1..m), eps(i) the sign carried by
// letter i+1. Kind A carries no signs (eps has size 0). Kind D requires the
// product of signs to be +1.
//
// As an orthogonal map, g sends e_i to eps_i * e_{pi(i)}; for kinds B and D
// it acts on the first m coordinates of an (m+1)-dimensional vector and
// fixes the last one, for kind A on all m coordinates.
struct GroupElement {
  Kind kind = Kind::A;
  IntVector pi;
  IntVector eps;

  Index letters() const { return pi.size(); }
};

// Ascending 1-based positions.
using DescentSet = std::vector<Index>;

Index group_order(Kind kind, Index m);

GroupElement identity(Kind kind, Index m);

// All elements, lexicographic in (pi, eps) with +1 before -1.
// Sizes: m!, 2^m m!, 2^(m-1) m!. Kind D needs m >= 2.
std::vector<GroupElement> enumerate_group(Kind kind, Index m);

// Kind A: positions j in 1..m-1 with pi(j) > pi(j+1).
// Kind B: positions j in 1..m with eps_{j-1} pi(j-1) > eps_j pi(j), where
//         the boundary value eps_0 pi(0) is 0.
// Kind D: same comparison with boundary value -eps_2 pi(2); needs m >= 2.
DescentSet descent_set(const GroupElement& g);

// Statistics on signed permutations (kind B only; the index conventions
// below treat an element on m letters as living one dimension up):
//   des    = |D|
//   maj    = sum over j in D of (j - 1)
//   comaj  = sum over j in D of (m + 1 - j)     (equals m*des - maj)
//   cobin  = sum over j in D of (j + (j+1) + ... + m)
Index stat_des(const GroupElement& g);
Index stat_maj(const GroupElement& g);
Index stat_comaj(const GroupElement& g);
Index stat_cobin(const GroupElement& g);

// w = g(v): w_{pi(i)} = eps_i v_i. Kind A: v has dimension m; kinds B, D:
// dimension m+1 with the last coordinate copied through.
IntVector apply(const GroupElement& g, const IntVector& v);

// w = g^{-1}(v): w_i = eps_i v_{pi(i)}.
IntVector apply_inverse(const GroupElement& g, const IntVector& v);

// Composite map g∘h of two elements of the same kind and rank.
GroupElement compose(const GroupElement& g, const GroupElement& h);

// One-line window notation with signs folded in, e.g. "2 -1 3".
std::string window_notation(const GroupElement& g);

}  // namespace symcone::coxeter
