#include "symcone/conegeom.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "symcone/parallel.hpp"

namespace symcone::conegeom {

namespace {

constexpr Index kMaxDim = 16;

std::string spec_name(const ConeSpec& spec) {
  std::ostringstream os;
  os << kind_char(spec.kind) << " n=" << spec.n << " a=(";
  for (Index i = 0; i < spec.a.size(); ++i) os << (i ? "," : "") << spec.a(i);
  os << ")";
  return os.str();
}

}  // namespace

void validate(const ConeSpec& spec) {
  const Index n = spec.n;
  if (spec.kind == Kind::D ? n < 3 : n < 2)
    throw SpecError("ambient dimension too small for " + spec_name(spec));
  if (n > kMaxDim) throw SpecError("ambient dimension too large");
  const Index len = spec.kind == Kind::A ? n : n - 1;
  if (spec.a.size() != len)
    throw SpecError("weight vector has wrong length for " + spec_name(spec));
  for (Index i = 0; i + 1 < len; ++i)
    if (spec.a(i) > spec.a(i + 1))
      throw SpecError("weights must be ascending for " + spec_name(spec));
  switch (spec.kind) {
    case Kind::A:
      if (spec.a.sum() != 1)
        throw SpecError("kind A weights must sum to 1, got " + spec_name(spec));
      break;
    case Kind::B:
      if (spec.a(0) < 0 || spec.a(len - 1) == 0)
        throw SpecError("kind B weights must be nonnegative with a positive top, got " +
                        spec_name(spec));
      break;
    case Kind::D:
      if (len >= 2 && std::abs(spec.a(0)) > spec.a(1))
        throw SpecError("kind D weights need |a_1| <= a_2, got " + spec_name(spec));
      if (spec.a(len - 1) == 0)
        throw SpecError("kind D weights need a positive top, got " + spec_name(spec));
      break;
  }
}

IntMatrix facet_matrix(const ConeSpec& spec) {
  validate(spec);
  const Index n = spec.n;
  IntMatrix f = IntMatrix::Zero(n, n);
  if (spec.kind == Kind::A) {
    for (Index j = 0; j + 1 < n; ++j) {
      f(j, j) = 1;
      f(j, j + 1) = -1;
    }
    f.row(n - 1) = spec.a.transpose();
    return f;
  }
  if (spec.kind == Kind::B) {
    f(0, 0) = 1;
  } else {
    f(0, 0) = 1;
    f(0, 1) = 1;
  }
  for (Index i = 1; i + 1 < n; ++i) {
    f(i, i) = 1;
    f(i, i - 1) = -1;
  }
  for (Index i = 0; i + 1 < n; ++i) f(n - 1, i) = -spec.a(i);
  f(n - 1, n - 1) = 1;
  return f;
}

IntMatrix generator_matrix(const ConeSpec& spec) {
  validate(spec);
  const Index n = spec.n;
  IntMatrix b = IntMatrix::Zero(n, n);
  if (spec.kind == Kind::A) {
    Index prefix = 0;  // a_1 + ... + a_j
    for (Index j = 0; j + 1 < n; ++j) {
      prefix += spec.a(j);
      for (Index i = 0; i < n; ++i) b(i, j) = (i <= j ? 1 : 0) - prefix;
    }
    b.col(n - 1).setOnes();
    return b;
  }
  // Suffix sums a_j + ... + a_{n-1} of the weight vector.
  std::vector<Index> suffix(static_cast<std::size_t>(n), 0);
  for (Index j = n - 2; j >= 0; --j)
    suffix[static_cast<std::size_t>(j)] = spec.a(j) + suffix[static_cast<std::size_t>(j + 1)];
  if (spec.kind == Kind::B) {
    for (Index j = 0; j + 1 < n; ++j) {
      for (Index i = j; i + 1 < n; ++i) b(i, j) = 1;
      b(n - 1, j) = suffix[static_cast<std::size_t>(j)];
    }
    b(n - 1, n - 1) = 1;
    return b;
  }
  // Kind D: the first two rays are sign-mixed, rays 3..n-1 are doubled so
  // that every column lies in Gamma.
  for (Index i = 0; i + 1 < n; ++i) {
    b(i, 0) = 1;
    b(i, 1) = i == 0 ? -1 : 1;
  }
  b(n - 1, 0) = suffix[0];
  b(n - 1, 1) = suffix[1] - spec.a(0);
  for (Index j = 2; j + 1 < n; ++j) {
    for (Index i = j; i + 1 < n; ++i) b(i, j) = 2;
    b(n - 1, j) = 2 * suffix[static_cast<std::size_t>(j)];
  }
  b(n - 1, n - 1) = 1;
  return b;
}

IntVector grading_weights(const ConeSpec& spec) {
  validate(spec);
  if (spec.kind == Kind::A) return IntVector::Ones(spec.n);
  IntVector w = IntVector::Zero(spec.n);
  w(spec.n - 1) = 1;
  return w;
}

bool membership(const ConeSpec& spec, const IntVector& x) {
  validate(spec);
  if (x.size() != spec.n) throw std::invalid_argument("membership: dimension mismatch");
  const Index n = spec.n;
  for (const auto& g : coxeter::enumerate_group(spec.kind, spec.letters())) {
    Index s = 0;
    if (spec.kind == Kind::A) {
      for (Index i = 0; i < n; ++i) s += spec.a(i) * x(g.pi(i) - 1);
      if (s < 0) return false;
    } else {
      for (Index i = 0; i + 1 < n; ++i) s += g.eps(i) * spec.a(i) * x(g.pi(i) - 1);
      if (s > x(n - 1)) return false;
    }
  }
  return true;
}

bool membership_fast(const ConeSpec& spec, const IntVector& x) {
  if (x.size() != spec.n) throw std::invalid_argument("membership_fast: dimension mismatch");
  const Index n = spec.n;
  std::array<Index, kMaxDim> buf{};
  if (spec.kind == Kind::A) {
    // min over permutations pairs ascending weights with descending values.
    for (Index i = 0; i < n; ++i) buf[static_cast<std::size_t>(i)] = x(i);
    std::sort(buf.begin(), buf.begin() + n, std::greater<>());
    Index s = 0;
    for (Index i = 0; i < n; ++i) s += spec.a(i) * buf[static_cast<std::size_t>(i)];
    return s >= 0;
  }
  const Index m = n - 1;
  if (spec.kind == Kind::B) {
    // max over signed permutations pairs ascending weights with ascending
    // absolute values.
    for (Index i = 0; i < m; ++i) buf[static_cast<std::size_t>(i)] = std::abs(x(i));
    std::sort(buf.begin(), buf.begin() + m);
    Index s = 0;
    for (Index i = 0; i < m; ++i) s += spec.a(i) * buf[static_cast<std::size_t>(i)];
    return s <= x(n - 1);
  }
  // Kind D: for each permutation, the unrestricted maximum puts every term
  // at |a_i x_{pi(i)}|; if the signs this needs have odd parity and no term
  // is free (zero), the cheapest term flips.
  std::array<Index, kMaxDim> idx{};
  std::iota(idx.begin(), idx.begin() + m, Index{0});
  do {
    Index s = 0;
    Index cheapest = -1;
    int parity = 1;
    bool free_sign = false;
    for (Index i = 0; i < m; ++i) {
      const Index t = spec.a(i) * x(idx[static_cast<std::size_t>(i)]);
      if (t == 0) {
        free_sign = true;
        continue;
      }
      if (t < 0) parity = -parity;
      const Index mag = std::abs(t);
      s += mag;
      if (cheapest < 0 || mag < cheapest) cheapest = mag;
    }
    if (!free_sign && parity < 0) s -= 2 * cheapest;
    if (s > x(n - 1)) return false;
  } while (std::next_permutation(idx.begin(), idx.begin() + m));
  return true;
}

bool in_fundamental_cone(const ConeSpec& spec, const IntVector& x) {
  return (facet_matrix(spec) * x).minCoeff() >= 0;
}

bool fixed_by_simple(Kind kind, Index n, Index j, const IntVector& y) {
  if (y.size() != n || j < 1 || j >= n)
    throw std::invalid_argument("fixed_by_simple: bad wall index or dimension");
  if (kind == Kind::A) return y(j - 1) == y(j);
  if (j == 1) return kind == Kind::B ? y(0) == 0 : y(0) + y(1) == 0;
  return y(j - 2) == y(j - 1);
}

bool is_salient(const ConeSpec& spec) {
  const IntVector g = generator_matrix(spec).transpose() * grading_weights(spec);
  return g.minCoeff() > 0;
}

void require_salient(const ConeSpec& spec) {
  if (!is_salient(spec))
    throw ExpansionError("generator with nonpositive grading (cone " + spec_name(spec) +
                         " is not salient); no expansion exists");
}

Index enumeration_halfwidth(const ConeSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case Kind::A:
      return spec.n * generator_matrix(spec).cwiseAbs().maxCoeff();
    case Kind::B:
      return 1;
    case Kind::D:
      return 1 + spec.a.cwiseAbs().sum();
  }
  return 0;
}

namespace {

// Nested loop over x(0..last); values step by `stride` starting at the
// residue matching `parity` (stride 1 ignores parity).
template <class Fn>
void scan_box(IntVector& x, Index pos, Index last, Index lo, Index hi, Index stride,
              Index parity, const Fn& leaf) {
  if (pos > last) {
    leaf();
    return;
  }
  Index start = lo;
  if (stride == 2 && (((start % 2) + 2) % 2) != parity) ++start;
  for (Index v = start; v <= hi; v += stride) {
    x(pos) = v;
    scan_box(x, pos + 1, last, lo, hi, stride, parity, leaf);
  }
}

}  // namespace

void for_each_cone_point(const ConeSpec& spec, Index d,
                         const std::function<void(const IntVector&)>& fn) {
  validate(spec);
  require_salient(spec);
  if (d < 0) return;
  const Index n = spec.n;
  const Index h = d * enumeration_halfwidth(spec);
  IntVector x = IntVector::Zero(n);

  if (spec.kind == Kind::A) {
    // Free coordinates x_1..x_{n-1}; the last one is pinned by the grading.
    auto leaf = [&] {
      x(n - 1) = d - x.head(n - 1).sum();
      if (membership_fast(spec, x)) fn(x);
    };
    scan_box(x, 0, n - 2, -h, h, 1, 0, leaf);
    return;
  }

  x(n - 1) = d;
  auto leaf = [&] {
    if (membership_fast(spec, x)) fn(x);
  };
  if (spec.kind == Kind::B) {
    scan_box(x, 0, n - 2, -h, h, 1, 0, leaf);
    return;
  }
  // Kind D: points of Gamma have all leading coordinates of equal parity.
  for (Index parity = 0; parity <= 1; ++parity) {
    if (parity == 1 && h < 1) continue;
    scan_box(x, 0, n - 2, -h, h, 2, parity, leaf);
  }
}

TriangulationReport triangulation_check(const ConeSpec& spec, Index bound) {
  validate(spec);
  require_salient(spec);
  const Index n = spec.n;
  const IntMatrix facets = facet_matrix(spec);
  struct Piece {
    coxeter::GroupElement g;
    coxeter::DescentSet d;
  };
  std::vector<Piece> pieces;
  for (auto& g : coxeter::enumerate_group(spec.kind, spec.letters()))
    pieces.push_back({g, coxeter::descent_set(g)});

  auto check_degree = [&](Index d) {
    TriangulationReport r;
    for_each_cone_point(spec, d, [&](const IntVector& x) {
      ++r.points_checked;
      Index covers = 0;
      for (const auto& p : pieces) {
        const IntVector y = coxeter::apply_inverse(p.g, x);
        if ((facets * y).minCoeff() < 0) continue;
        bool on_dropped_wall = false;
        for (Index j : p.d)
          if (fixed_by_simple(spec.kind, n, j, y)) {
            on_dropped_wall = true;
            break;
          }
        if (!on_dropped_wall) ++covers;
      }
      if (covers != 1) r.violations.push_back({x, covers});
    });
    return r;
  };

  return parallel::map_reduce(
      bound + 1, TriangulationReport{},
      [&](Index d) { return check_degree(d); },
      [](TriangulationReport& acc, TriangulationReport&& part) {
        acc.points_checked += part.points_checked;
        for (auto& v : part.violations) acc.violations.push_back(std::move(v));
      });
}

BigInt integer_determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const Index n = m.rows();
  std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(n),
                                     std::vector<BigInt>(static_cast<std::size_t>(n)));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);

  // Bareiss fraction-free elimination; every division is exact.
  BigInt sign = 1;
  BigInt prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    auto uk = static_cast<std::size_t>(k);
    if (a[uk][uk] == 0) {
      Index swap_row = -1;
      for (Index i = k + 1; i < n; ++i)
        if (a[static_cast<std::size_t>(i)][uk] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[uk], a[static_cast<std::size_t>(swap_row)]);
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) {
        auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
        a[ui][uj] = (a[ui][uj] * a[uk][uk] - a[ui][uk] * a[uk][uj]) / prev;
      }
    prev = a[uk][uk];
  }
  return sign * a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
}

}  // namespace symcone::conegeom
