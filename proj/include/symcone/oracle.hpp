#pragma once

#include <vector>

#include "symcone/conegeom.hpp"
#include "symcone/series.hpp"
#include "symcone/types.hpp"

namespace symcone::oracle {

// Counts cone lattice points grading by grading via exhaustive box
// enumeration and the membership predicate; shares nothing with the
// rational-sum expansion path. weights must be the kind's default grading.
series::TruncatedSeries oracle_series(const conegeom::ConeSpec& spec, const IntVector& weights,
                                      Index truncation);

// Sequence 0 <= l_1/1 <= l_2/2 <= ... <= l_n/n, compared exactly by
// cross-multiplication.
struct LecturePartition {
  IntVector lambda;

  explicit LecturePartition(IntVector l);
  Index parts() const { return lambda.size(); }
};

bool is_lecture_hall(const IntVector& lambda);

// All such sequences with l_n <= cap, lexicographic.
std::vector<LecturePartition> enumerate_lecture_hall(Index n, Index cap);

// sum_i ceil(l_i / 2i)  and  sum_i 2i * ceil(l_i / 2i).
Index lh_stat1(const LecturePartition& p);
Index lh_stat2(const LecturePartition& p);

// Generating series of the weight sum_i a_i * ceil(l_i / 2i) over all
// n-part sequences. Requires a_i >= 0 with a_n > 0: the top weight caps
// l_n, and with a_n = 0 every attained degree would have infinitely many
// witnesses (the chain bounds l_n only from below).
series::TruncatedSeries lecture_hall_weighted_series(Index n, const IntVector& a,
                                                     Index truncation);

}  // namespace symcone::oracle
