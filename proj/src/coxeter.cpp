#include "symcone/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace symcone {

char kind_char(Kind k) {
  switch (k) {
    case Kind::A: return 'A';
    case Kind::B: return 'B';
    case Kind::D: return 'D';
  }
  return '?';
}

Kind parse_kind(const std::string& s) {
  if (s == "A" || s == "a") return Kind::A;
  if (s == "B" || s == "b") return Kind::B;
  if (s == "D" || s == "d") return Kind::D;
  throw SpecError("unknown kind '" + s + "' (expected A, B or D)");
}

}  // namespace symcone

namespace symcone::coxeter {

namespace {

void check_element(const GroupElement& g) {
  const Index m = g.pi.size();
  if (m <= 0) throw SpecError("group element needs at least one letter");
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (Index i = 0; i < m; ++i) {
    const Index v = g.pi(i);
    if (v < 1 || v > m || seen[static_cast<std::size_t>(v - 1)])
      throw SpecError("pi is not a permutation of 1..m");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  if (g.kind == Kind::A) {
    if (g.eps.size() != 0) throw SpecError("kind A carries no signs");
    return;
  }
  if (g.eps.size() != m) throw SpecError("eps must have one sign per letter");
  Index prod = 1;
  for (Index i = 0; i < m; ++i) {
    if (g.eps(i) != 1 && g.eps(i) != -1) throw SpecError("signs must be +1 or -1");
    prod *= g.eps(i);
  }
  if (g.kind == Kind::D && prod != 1)
    throw SpecError("kind D requires evenly many sign changes");
  if (g.kind == Kind::D && m < 2) throw SpecError("kind D needs at least 2 letters");
}

Index require_letters(Kind kind, Index m) {
  if (m < 1) throw SpecError("rank must be positive");
  if (kind == Kind::D && m < 2) throw SpecError("kind D needs at least 2 letters");
  return m;
}

}  // namespace

Index group_order(Kind kind, Index m) {
  require_letters(kind, m);
  Index fact = 1;
  for (Index i = 2; i <= m; ++i) fact *= i;
  switch (kind) {
    case Kind::A: return fact;
    case Kind::B: return fact << m;
    case Kind::D: return fact << (m - 1);
  }
  return 0;
}

GroupElement identity(Kind kind, Index m) {
  require_letters(kind, m);
  GroupElement g;
  g.kind = kind;
  g.pi = IntVector::LinSpaced(m, 1, m);
  g.eps = kind == Kind::A ? IntVector(0) : IntVector::Ones(m);
  return g;
}

std::vector<GroupElement> enumerate_group(Kind kind, Index m) {
  require_letters(kind, m);
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(group_order(kind, m)));

  std::vector<Index> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), Index{1});
  do {
    GroupElement g;
    g.kind = kind;
    g.pi = Eigen::Map<const IntVector>(perm.data(), m);
    if (kind == Kind::A) {
      g.eps = IntVector(0);
      out.push_back(std::move(g));
      continue;
    }
    // Sign masks in lexicographic order with +1 < -1: the first letter is
    // the most significant bit.
    const std::uint64_t masks = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      if (kind == Kind::D && (std::popcount(mask) & 1u)) continue;
      GroupElement h;
      h.kind = kind;
      h.pi = g.pi;
      h.eps = IntVector(m);
      for (Index i = 0; i < m; ++i)
        h.eps(i) = (mask >> (m - 1 - i)) & 1u ? -1 : 1;
      out.push_back(std::move(h));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

DescentSet descent_set(const GroupElement& g) {
  check_element(g);
  const Index m = g.letters();
  DescentSet d;
  if (g.kind == Kind::A) {
    for (Index j = 1; j < m; ++j)
      if (g.pi(j - 1) > g.pi(j)) d.push_back(j);
    return d;
  }
  // Signed value at 1-based position j; the boundary value at position 0
  // distinguishes kinds B and D.
  auto val = [&](Index j) { return g.eps(j - 1) * g.pi(j - 1); };
  const Index boundary = g.kind == Kind::B ? 0 : -val(2);
  for (Index j = 1; j <= m; ++j) {
    const Index left = j == 1 ? boundary : val(j - 1);
    if (left > val(j)) d.push_back(j);
  }
  return d;
}

namespace {

const GroupElement& require_kind_b(const GroupElement& g) {
  if (g.kind != Kind::B)
    throw SpecError("descent statistics are defined for kind B elements only");
  return g;
}

}  // namespace

Index stat_des(const GroupElement& g) {
  return static_cast<Index>(descent_set(require_kind_b(g)).size());
}

Index stat_maj(const GroupElement& g) {
  Index s = 0;
  for (Index j : descent_set(require_kind_b(g))) s += j - 1;
  return s;
}

Index stat_comaj(const GroupElement& g) {
  const Index m = g.letters();
  Index s = 0;
  for (Index j : descent_set(require_kind_b(g))) s += m + 1 - j;
  return s;
}

Index stat_cobin(const GroupElement& g) {
  const Index m = g.letters();
  Index s = 0;
  for (Index j : descent_set(require_kind_b(g)))
    s += (m * (m + 1)) / 2 - ((j - 1) * j) / 2;  // j + (j+1) + ... + m
  return s;
}

IntVector apply(const GroupElement& g, const IntVector& v) {
  check_element(g);
  const Index m = g.letters();
  const Index dim = g.kind == Kind::A ? m : m + 1;
  if (v.size() != dim) throw std::invalid_argument("apply: dimension mismatch");
  IntVector w(dim);
  if (g.kind != Kind::A) w(m) = v(m);
  for (Index i = 0; i < m; ++i) {
    const Index sign = g.kind == Kind::A ? 1 : g.eps(i);
    w(g.pi(i) - 1) = sign * v(i);
  }
  return w;
}

IntVector apply_inverse(const GroupElement& g, const IntVector& v) {
  check_element(g);
  const Index m = g.letters();
  const Index dim = g.kind == Kind::A ? m : m + 1;
  if (v.size() != dim) throw std::invalid_argument("apply_inverse: dimension mismatch");
  IntVector w(dim);
  if (g.kind != Kind::A) w(m) = v(m);
  for (Index i = 0; i < m; ++i) {
    const Index sign = g.kind == Kind::A ? 1 : g.eps(i);
    w(i) = sign * v(g.pi(i) - 1);
  }
  return w;
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  check_element(g);
  check_element(h);
  if (g.kind != h.kind || g.letters() != h.letters())
    throw std::invalid_argument("compose: mismatched kind or rank");
  const Index m = g.letters();
  GroupElement r;
  r.kind = g.kind;
  r.pi = IntVector(m);
  r.eps = g.kind == Kind::A ? IntVector(0) : IntVector(m);
  for (Index i = 0; i < m; ++i) {
    const Index mid = h.pi(i) - 1;
    r.pi(i) = g.pi(mid);
    if (g.kind != Kind::A) r.eps(i) = h.eps(i) * g.eps(mid);
  }
  return r;
}

std::string window_notation(const GroupElement& g) {
  check_element(g);
  std::ostringstream os;
  for (Index i = 0; i < g.letters(); ++i) {
    if (i) os << ' ';
    os << (g.kind == Kind::A ? g.pi(i) : g.eps(i) * g.pi(i));
  }
  return os.str();
}

}  // namespace symcone::coxeter
