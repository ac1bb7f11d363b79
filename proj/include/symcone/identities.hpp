#pragma once

#include <string>

#include "symcone/polynomial.hpp"
#include "symcone/series.hpp"
#include "symcone/types.hpp"

namespace symcone::identities {

// [k]_t = 1 + t + ... + t^{k-1}; [0]_t = 0.
poly::QPolynomial q_bracket(Index k);

// [k] evaluated at t^c: sum_{i<k} t^{ci}. With c = 0 this is the constant k.
poly::QPolynomial q_bracket_scaled(Index k, Index c);

// [k]_t! = [1][2]...[k]; [0]_t! = 1.
poly::QPolynomial q_factorial(Index k);

// Descent-count distribution sum t^{des} over signed permutations of m
// letters.
poly::QPolynomial eulerian_B(Index m);

// comajor distribution sum t^{comaj} over the same group.
poly::QPolynomial comaj_distribution(Index m);

struct VerifyResult {
  bool pass = false;
  std::string detail;  // first counterexample, or a short confirmation

  explicit operator bool() const { return pass; }
};

// eulerian_B(m) / (1-t)^{m+1} == sum_k (2k+1)^m t^k, checked to the given
// truncation twice: once from the enumerated numerator, once by counting
// lattice points of the cone over the unit cube (kind B, a = (0,..,0,1)).
VerifyResult verify_eulerian_identity(Index m, Index truncation);

// comaj_distribution(m) == (1+t)^m * [m]_t! as exact polynomials; also
// checks the value 2^m m! at t = 1.
VerifyResult verify_comaj_closed_form(Index m);

// Joint distribution identity, truncated at x-degree N:
//   sum x^{des} q^{comaj}  ==  prod_{i=0..m} (1 - x q^i)
//                              * sum_{k>=0} ([k+1]_q + q [k]_q)^m x^k.
// The companion major-index form
//   sum x^{des} q^{maj} == prod_{i=0..m} (1 - x q^i)
//                          * sum_{k>=0} ([k+1]_q + [k]_q)^m x^k
// is checked alongside.
VerifyResult verify_joint_chow_gessel(Index m, Index truncation);

// Specialized lattice-point series of the cone with almost-constant
// weights a = (c,..,c,c+b) in dimension m+1, in closed form:
//   b == 0:  [c]_t (1 + t^c)^m / (1 - t^c)^{m+1}
//   b >= 1:  [b]_t sum_k ([k+1]_{t^c} + t^c [k]_{t^c})^m t^{bk}.
series::TruncatedSeries ehrhart_almost_constant(Index m, Index b, Index c, Index truncation);

// Closed form == rational-sum expansion == point-count oracle.
VerifyResult verify_almost_constant(Index m, Index b, Index c, Index truncation);

// Weights a_i = 2di + c (i < n-1), a_{n-1} = 2d(n-1) + c + b: the cone
// series in dimension n equals 1/(1-t) times the weighted lecture hall
// series on n-1 parts.
VerifyResult verify_lecture_hall_corollary(Index n, Index d, Index c, Index b,
                                           Index truncation);

// Trivariate refinement, truncated at x-degree N: over n-part lecture hall
// sequences, sum x^{ceil(l_n/2n)} q^{stat1} y^{stat2} equals
//   sum over signed permutations of n letters of
//     q^{comaj} x^{des} y^{2 cobin}
//       / prod_{i=0..n-1} (1 - x q^{n-i} y^{2((i+1)+...+n)}).
VerifyResult verify_eqn_ps(Index n, Index truncation);

}  // namespace symcone::identities
