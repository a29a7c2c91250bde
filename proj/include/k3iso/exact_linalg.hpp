#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "k3iso/error.hpp"

namespace k3iso {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVec3 = std::array<Integer, 3>;
using IntVec4 = std::array<Integer, 4>;
using RatVec3 = std::array<Rational, 3>;
using RatVec4 = std::array<Rational, 4>;

/// Builds a rational in canonical form (lowest terms, positive denominator).
Rational make_rational(const Integer& num, const Integer& den);

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<T> row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
      }
    return p;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);
std::string to_string(const IntMatrix& m);

RatMatrix to_rational(const IntMatrix& m);
/// Converts back to integers; nullopt if any entry has a denominator.
std::optional<IntMatrix> to_integer(const RatMatrix& m);

// --- small fixed-size vector helpers -------------------------------------

template <class T, std::size_t N>
std::array<T, N> operator+(const std::array<T, N>& a, const std::array<T, N>& b) {
  std::array<T, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
  return r;
}

template <class T, std::size_t N>
std::array<T, N> operator-(const std::array<T, N>& a, const std::array<T, N>& b) {
  std::array<T, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] - b[i];
  return r;
}

template <class T, std::size_t N>
T dot(const std::array<T, N>& a, const std::array<T, N>& b) {
  T s = 0;
  for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}

template <class T>
std::array<T, 3> cross(const std::array<T, 3>& a, const std::array<T, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

RatVec3 to_rational(const IntVec3& v);
std::optional<IntVec3> to_integer(const RatVec3& v);

/// Divides out the content; the zero vector is returned unchanged.
IntVec3 primitive(const IntVec3& v);
Integer content(std::span<const Integer> v);

/// Matrix-vector product for 3x3 integer matrices (column convention).
IntVec3 mat_vec(const IntMatrix& m, const IntVec3& v);
RatVec3 mat_vec(const IntMatrix& m, const RatVec3& v);

std::string to_string(const IntVec3& v);
std::string to_string(const IntVec4& v);
std::string to_string(const RatVec3& v);

// --- lattice algebra -------------------------------------------------------

struct HermiteDecomposition {
  IntMatrix h;  ///< row Hermite normal form of the input
  IntMatrix u;  ///< unimodular transform, h = u * input
};

/// Row-style Hermite normal form: pivots positive, entries above a pivot
/// reduced into [0, pivot), zero rows at the bottom.
HermiteDecomposition hnf(const IntMatrix& m);

/// Invariant factors d1 | d2 | ... of the Smith normal form (nonzero ones only).
std::vector<Integer> smith_invariants(const IntMatrix& m);

Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

bool is_unimodular(const IntMatrix& m);

/// Inverse of a square rational matrix; nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Canonical basis (3x4, rows) of {m in Z^4 : <w, m> = 0}: the HNF of any
/// basis of the kernel lattice, hence independent of how it was found.
IntMatrix kernel_basis(const IntVec4& w);

/// Coordinates c of a lattice point m = c * basis (basis rows generate the
/// lattice). Throws ErrorKind::NotInLattice when no integer solution exists.
IntVec3 to_coords(const IntVec4& m, const IntMatrix& basis);
/// Rational coordinates for points of the real span of the basis.
RatVec3 to_coords(const RatVec4& m, const IntMatrix& basis);

IntVec4 from_coords(const IntVec3& c, const IntMatrix& basis);

}  // namespace k3iso
