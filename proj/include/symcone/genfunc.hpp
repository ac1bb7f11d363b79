#pragma once

#include <vector>

#include "symcone/conegeom.hpp"
#include "symcone/series.hpp"
#include "symcone/types.hpp"

namespace symcone::genfunc {

// One simple rational summand z^numerator / prod_k (1 - z^denominators[k]).
// Numerator coefficients are always 1; a sum for a cone in R^n has exactly
// n denominator vectors per term.
struct RationalTerm {
  IntVector numerator;
  std::vector<IntVector> denominators;
};

struct RationalSum {
  Index dimension = 0;
  std::vector<RationalTerm> terms;
};

// One term per group element sigma: numerator sums the images sigma*b_j of
// the generators indexed by the descent set of sigma, denominators are all
// n images sigma*b_1..sigma*b_n. Term order follows enumerate_group.
RationalSum build_general(const conegeom::ConeSpec& spec);

// The same sums written directly from the per-family closed formulas,
// sharing no construction code with build_general. Kind-specific entry
// points plus a dispatcher.
RationalSum build_typeA(const conegeom::ConeSpec& spec);
RationalSum build_typeB(const conegeom::ConeSpec& spec);
RationalSum build_typeD(const conegeom::ConeSpec& spec);
RationalSum build_typed(const conegeom::ConeSpec& spec);

// Substitutes z_i -> t^{weights_i}, yielding a one-dimensional sum. A
// denominator vector specializing to exponent zero has no Laurent
// expansion and raises ExpansionError.
RationalSum specialize(const RationalSum& sum, const IntVector& weights);

// Expands a one-dimensional sum to a truncated series. Every denominator
// exponent must be positive. Terms with negative numerator degree are
// expanded over a widened window [min(0, numerator degree), N]; all
// negative-degree coefficients of the total must cancel (ExpansionError
// otherwise). Terms are expanded independently (and in parallel) and the
// merge is exact, so results do not depend on the worker count.
series::TruncatedSeries expand(const RationalSum& sum, Index truncation);

// Convenience: specialize under `weights`, then expand.
series::TruncatedSeries expand(const RationalSum& sum, const IntVector& weights,
                               Index truncation);

}  // namespace symcone::genfunc
