#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symcone {

using Index = std::int64_t;

// Exponent vectors, group data and cone matrices are small dense integer
// objects; Eigen provides the arithmetic. Arbitrary-precision arithmetic is
// confined to series/polynomial coefficients.
using IntVector = Eigen::Matrix<Index, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<Index, Eigen::Dynamic, Eigen::Dynamic>;
using BigInt = boost::multiprecision::cpp_int;

// Reflection group families realized on coordinates: A acts by permutations
// of all n coordinates, B and D act by signed permutations of the first n-1
// with the last coordinate fixed (D restricts to evenly many sign changes).
enum class Kind { A, B, D };

char kind_char(Kind k);
Kind parse_kind(const std::string& s);

// A structurally invalid configuration (cone weights, dimensions, ranks).
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A series expansion that cannot exist: nonpositive or zero specialized
// denominator exponents, non-salient cones, uncancelled negative degrees.
class ExpansionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool same_vector(const IntVector& u, const IntVector& v) {
  return u.size() == v.size() && (u.array() == v.array()).all();
}

}  // namespace symcone
