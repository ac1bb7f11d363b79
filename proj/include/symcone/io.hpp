#pragma once

#include <string>

#include "symcone/genfunc.hpp"
#include "symcone/series.hpp"
#include "symcone/types.hpp"

namespace symcone::io {

// {"truncation": N, "coefficients": ["c0", "c1", ...]} — coefficients are
// decimal strings since they are arbitrary-precision integers.
std::string series_json(const series::TruncatedSeries& s);

// "degree,coefficient" rows.
std::string series_csv(const series::TruncatedSeries& s);

// Human-readable "1 + 3 t^4 + ..." form.
std::string series_text(const series::TruncatedSeries& s);

// JSON array of {"numerator": [ints], "denominators": [[ints], ...]}, in
// term order.
std::string terms_json(const genfunc::RationalSum& sum);

}  // namespace symcone::io
