#pragma once

#include <map>
#include <vector>

#include "symcone/types.hpp"

namespace symcone::series {

// Power series truncated at a fixed degree; absent keys are zero. All
// stored degrees lie in [0, truncation].
struct TruncatedSeries {
  Index truncation = 0;
  std::map<Index, BigInt> coefficients;

  const BigInt& coeff(Index d) const;
  // Adds v at degree d, silently dropping degrees beyond the truncation.
  void add_coeff(Index d, const BigInt& v);
  // Dense coefficient list for degrees 0..truncation.
  std::vector<BigInt> dense() const;
};

// Sum; the result is truncated at the shorter of the two inputs.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);

// Coefficient-wise equality up to the shorter truncation.
bool series_equal(const TruncatedSeries& a, const TruncatedSeries& b);

// First degree (up to the shorter truncation) where the two differ, or -1.
Index first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b);

// c * t^shift * s, same truncation; shift must be nonnegative.
TruncatedSeries series_scale_shift(const TruncatedSeries& s, const BigInt& c, Index shift);

// s / (1 - t^e) up to the truncation; e must be positive.
TruncatedSeries geometric_mul(const TruncatedSeries& s, Index e);

}  // namespace symcone::series
