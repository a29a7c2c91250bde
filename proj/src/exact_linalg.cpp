#include "k3iso/exact_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace k3iso {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotInLattice: return "not in lattice";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::OriginNotInterior: return "origin not interior";
    case ErrorKind::NotReflexive: return "not reflexive";
    case ErrorKind::NotLattice: return "not a lattice polytope";
    case ErrorKind::NotWellPosed: return "not well-posed";
    case ErrorKind::WrongDegree: return "wrong degree";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::InconsistentColumns: return "inconsistent columns";
    case ErrorKind::RankDeficientColumns: return "rank-deficient columns";
    case ErrorKind::NotUnimodular: return "not unimodular";
    case ErrorKind::NotContained: return "not contained";
    case ErrorKind::Dataset: return "malformed dataset";
  }
  return "unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << m(r, c);
    }
    os << ']';
  }
  return os << ']';
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix q(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) q(r, c) = m(r, c);
  return q;
}

std::optional<IntMatrix> to_integer(const RatMatrix& m) {
  IntMatrix z(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).get_den() != 1) return std::nullopt;
      z(r, c) = m(r, c).get_num();
    }
  return z;
}

RatVec3 to_rational(const IntVec3& v) { return {Rational(v[0]), Rational(v[1]), Rational(v[2])}; }

std::optional<IntVec3> to_integer(const RatVec3& v) {
  IntVec3 z;
  for (std::size_t i = 0; i < 3; ++i) {
    if (v[i].get_den() != 1) return std::nullopt;
    z[i] = v[i].get_num();
  }
  return z;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

IntVec3 primitive(const IntVec3& v) {
  Integer g = content(v);
  if (g == 0 || g == 1) return v;
  return {Integer(v[0] / g), Integer(v[1] / g), Integer(v[2] / g)};
}

IntVec3 mat_vec(const IntMatrix& m, const IntVec3& v) {
  IntVec3 r;
  for (std::size_t i = 0; i < 3; ++i) r[i] = m(i, 0) * v[0] + m(i, 1) * v[1] + m(i, 2) * v[2];
  return r;
}

RatVec3 mat_vec(const IntMatrix& m, const RatVec3& v) {
  RatVec3 r;
  for (std::size_t i = 0; i < 3; ++i) r[i] = m(i, 0) * v[0] + m(i, 1) * v[1] + m(i, 2) * v[2];
  return r;
}

namespace {

template <class V>
std::string join_vec(const V& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

// row_a <- s*row_a + t*row_b ; row_b <- p*row_a + q*row_b (old values)
void combine_rows(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s,
                  const Integer& t, const Integer& p, const Integer& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Integer x = m(a, c), y = m(b, c);
    m(a, c) = s * x + t * y;
    m(b, c) = p * x + q * y;
  }
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += k * m(src, c);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

bool is_diagonal(const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (r != c && m(r, c) != 0) return false;
  return true;
}

}  // namespace

std::string to_string(const IntVec3& v) { return join_vec(v); }
std::string to_string(const IntVec4& v) { return join_vec(v); }
std::string to_string(const RatVec3& v) { return join_vec(v); }

HermiteDecomposition hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, c) == 0) continue;
      Integer a = h(r, c), b = h(i, c), g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer p = -b / g, q = a / g;
      combine_rows(h, r, i, s, t, p, q);
      combine_rows(u, r, i, s, t, p, q);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer k;
      mpz_fdiv_q(k.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (k == 0) continue;
      add_row_multiple(h, i, r, -k);
      add_row_multiple(u, i, r, -k);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

std::vector<Integer> smith_invariants(const IntMatrix& m) {
  IntMatrix w = m;
  bool transposed = false;
  while (!is_diagonal(w)) {
    w = hnf(w).h.transpose();
    transposed = !transposed;
  }
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(w.rows(), w.cols()); ++i)
    if (w(i, i) != 0) d.push_back(abs(w(i, i)));
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Integer g = gcd(d[i], d[j]);
      Integer l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  return d;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  RatMatrix a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(k, p);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  return abs(determinant(m)) == 1;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    a.swap_rows(k, p);
    inv.swap_rows(k, p);
    Rational pivot = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

IntMatrix kernel_basis(const IntVec4& w) {
  IntMatrix col(4, 1);
  for (std::size_t i = 0; i < 4; ++i) col(i, 0) = w[i];
  if (col.is_zero()) throw std::invalid_argument("kernel of the zero functional");
  const IntMatrix u = hnf(col).u;
  IntMatrix spanning(3, 4);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 4; ++c) spanning(r, c) = u(r + 1, c);
  return hnf(spanning).h;
}

namespace {

// Solves c * basis = m over Q for a full-row-rank 3x4 basis; nullopt when m is
// not in the row span.
std::optional<RatVec3> solve_coords(const RatVec4& m, const IntMatrix& basis) {
  if (basis.rows() != 3 || basis.cols() != 4)
    throw std::invalid_argument("coordinate basis must be 3x4");
  for (std::size_t skip = 0; skip < 4; ++skip) {
    RatMatrix sub(3, 3);
    RatVec3 rhs;
    for (std::size_t c = 0, k = 0; c < 4; ++c) {
      if (c == skip) continue;
      for (std::size_t r = 0; r < 3; ++r) sub(r, k) = basis(r, c);
      rhs[k] = m[c];
      ++k;
    }
    auto inv = inverse(sub);
    if (!inv) continue;
    RatVec3 coords;
    for (std::size_t j = 0; j < 3; ++j) {
      coords[j] = 0;
      for (std::size_t k = 0; k < 3; ++k) coords[j] += rhs[k] * (*inv)(k, j);
    }
    for (std::size_t c = 0; c < 4; ++c) {
      Rational v = 0;
      for (std::size_t r = 0; r < 3; ++r) v += coords[r] * basis(r, c);
      if (v != m[c]) return std::nullopt;
    }
    return coords;
  }
  throw std::invalid_argument("coordinate basis is rank-deficient");
}

}  // namespace

RatVec3 to_coords(const RatVec4& m, const IntMatrix& basis) {
  auto c = solve_coords(m, basis);
  if (!c) throw Error(ErrorKind::NotInLattice, "point not in the span of the basis");
  return *c;
}

IntVec3 to_coords(const IntVec4& m, const IntMatrix& basis) {
  RatVec4 q{Rational(m[0]), Rational(m[1]), Rational(m[2]), Rational(m[3])};
  auto c = solve_coords(q, basis);
  if (!c) throw Error(ErrorKind::NotInLattice, to_string(m) + " is not in the span of the basis");
  auto z = to_integer(*c);
  if (!z) throw Error(ErrorKind::NotInLattice, to_string(m) + " is not a lattice point of the basis");
  return *z;
}

IntVec4 from_coords(const IntVec3& c, const IntMatrix& basis) {
  IntVec4 m;
  for (std::size_t j = 0; j < 4; ++j) m[j] = c[0] * basis(0, j) + c[1] * basis(1, j) + c[2] * basis(2, j);
  return m;
}

}  // namespace k3iso
