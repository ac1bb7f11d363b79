#include "symcone/series.hpp"

#include <algorithm>

namespace symcone::series {

namespace {
const BigInt kZero = 0;
}

const BigInt& TruncatedSeries::coeff(Index d) const {
  auto it = coefficients.find(d);
  return it == coefficients.end() ? kZero : it->second;
}

void TruncatedSeries::add_coeff(Index d, const BigInt& v) {
  if (d > truncation || v == 0) return;
  if (d < 0) throw std::invalid_argument("series coefficient at negative degree");
  BigInt& c = coefficients[d];
  c += v;
  if (c == 0) coefficients.erase(d);
}

std::vector<BigInt> TruncatedSeries::dense() const {
  std::vector<BigInt> out(static_cast<std::size_t>(truncation) + 1, kZero);
  for (const auto& [d, c] : coefficients) out[static_cast<std::size_t>(d)] = c;
  return out;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r;
  r.truncation = std::min(a.truncation, b.truncation);
  for (const auto& [d, c] : a.coefficients) r.add_coeff(d, c);
  for (const auto& [d, c] : b.coefficients) r.add_coeff(d, c);
  return r;
}

bool series_equal(const TruncatedSeries& a, const TruncatedSeries& b) {
  return first_mismatch(a, b) < 0;
}

Index first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b) {
  const Index n = std::min(a.truncation, b.truncation);
  for (Index d = 0; d <= n; ++d)
    if (a.coeff(d) != b.coeff(d)) return d;
  return -1;
}

TruncatedSeries series_scale_shift(const TruncatedSeries& s, const BigInt& c, Index shift) {
  if (shift < 0) throw std::invalid_argument("series_scale_shift: negative shift");
  TruncatedSeries r;
  r.truncation = s.truncation;
  for (const auto& [d, v] : s.coefficients) r.add_coeff(d + shift, c * v);
  return r;
}

TruncatedSeries geometric_mul(const TruncatedSeries& s, Index e) {
  if (e <= 0) throw std::invalid_argument("geometric_mul: exponent must be positive");
  std::vector<BigInt> buf = s.dense();
  for (Index d = e; d <= s.truncation; ++d)
    buf[static_cast<std::size_t>(d)] += buf[static_cast<std::size_t>(d - e)];
  TruncatedSeries r;
  r.truncation = s.truncation;
  for (Index d = 0; d <= s.truncation; ++d) r.add_coeff(d, buf[static_cast<std::size_t>(d)]);
  return r;
}

}  // namespace symcone::series
