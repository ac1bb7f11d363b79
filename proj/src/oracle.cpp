#include "symcone/oracle.hpp"

#include "symcone/parallel.hpp"

namespace symcone::oracle {

series::TruncatedSeries oracle_series(const conegeom::ConeSpec& spec, const IntVector& weights,
                                      Index truncation) {
  conegeom::validate(spec);
  conegeom::require_salient(spec);
  if (!same_vector(weights, conegeom::grading_weights(spec)))
    throw std::invalid_argument("oracle_series supports the default grading only");
  if (truncation < 0) throw std::invalid_argument("oracle_series: negative truncation");

  std::vector<BigInt> counts = parallel::map_reduce(
      truncation + 1, std::vector<BigInt>(static_cast<std::size_t>(truncation) + 1, BigInt(0)),
      [&](Index d) {
        Index count = 0;
        conegeom::for_each_cone_point(spec, d, [&](const IntVector&) { ++count; });
        std::vector<BigInt> local(static_cast<std::size_t>(truncation) + 1, BigInt(0));
        local[static_cast<std::size_t>(d)] = count;
        return local;
      },
      [](std::vector<BigInt>& acc, std::vector<BigInt>&& part) {
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += part[i];
      });

  series::TruncatedSeries out;
  out.truncation = truncation;
  for (Index d = 0; d <= truncation; ++d) out.add_coeff(d, counts[static_cast<std::size_t>(d)]);
  return out;
}

bool is_lecture_hall(const IntVector& lambda) {
  const Index n = lambda.size();
  if (n < 1) return false;
  if (lambda(0) < 0) return false;
  for (Index i = 0; i + 1 < n; ++i)
    if (lambda(i) * (i + 2) > lambda(i + 1) * (i + 1)) return false;
  return true;
}

LecturePartition::LecturePartition(IntVector l) : lambda(std::move(l)) {
  if (!is_lecture_hall(lambda))
    throw std::invalid_argument("sequence violates the lecture hall chain");
}

std::vector<LecturePartition> enumerate_lecture_hall(Index n, Index cap) {
  if (n < 1) throw std::invalid_argument("enumerate_lecture_hall: need at least one part");
  if (cap < 0) return {};
  std::vector<LecturePartition> out;
  IntVector lambda = IntVector::Zero(n);
  // At slot i (1-based), any extension needs l_n >= n*l_i/i, so
  // l_i <= i*cap/n; the chain gives the lower bound ceil(i*l_{i-1}/(i-1)).
  auto rec = [&](auto&& self, Index i) -> void {
    if (i > n) {
      out.emplace_back(lambda);
      return;
    }
    Index lo = 0;
    if (i > 1) {
      const Index prev = lambda(i - 2);
      lo = (prev * i + (i - 2)) / (i - 1);  // ceil(prev*i/(i-1)), prev >= 0
    }
    const Index hi = i * cap / n;
    for (Index v = lo; v <= hi; ++v) {
      lambda(i - 1) = v;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  return out;
}

namespace {

Index ceil_div(Index p, Index q) { return (p + q - 1) / q; }  // p >= 0, q > 0

}  // namespace

Index lh_stat1(const LecturePartition& p) {
  Index s = 0;
  for (Index i = 1; i <= p.parts(); ++i) s += ceil_div(p.lambda(i - 1), 2 * i);
  return s;
}

Index lh_stat2(const LecturePartition& p) {
  Index s = 0;
  for (Index i = 1; i <= p.parts(); ++i) s += 2 * i * ceil_div(p.lambda(i - 1), 2 * i);
  return s;
}

series::TruncatedSeries lecture_hall_weighted_series(Index n, const IntVector& a,
                                                     Index truncation) {
  if (a.size() != n) throw std::invalid_argument("weight vector must have one entry per part");
  if (truncation < 0) throw std::invalid_argument("negative truncation");
  for (Index i = 0; i < n; ++i)
    if (a(i) < 0) throw std::invalid_argument("weights must be nonnegative");
  if (a(n - 1) <= 0)
    throw std::invalid_argument(
        "weighted series needs a positive top weight; with a_n = 0 every degree has "
        "infinitely many sequences");

  // Any sequence with larger top part has weight beyond the truncation.
  const Index cap = 2 * n * (truncation / a(n - 1) + 1);
  series::TruncatedSeries out;
  out.truncation = truncation;
  for (const auto& p : enumerate_lecture_hall(n, cap)) {
    Index w = 0;
    for (Index i = 1; i <= n; ++i) w += a(i - 1) * ceil_div(p.lambda(i - 1), 2 * i);
    if (w <= truncation) out.add_coeff(w, 1);
  }
  return out;
}

}  // namespace symcone::oracle
