#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "k3iso/exact_linalg.hpp"
#include "k3iso/polytope.hpp"

namespace k3iso {

/// A well-posed weight quadruple for the weighted projective space P(a).
///
/// Weights are stored ascending; W, X, Y, Z always name the coordinates of
/// the sorted weights a0 <= a1 <= a2 <= a3. `input_order()[i]` records which
/// input position sorted weight i came from.
class WeightSystem {
 public:
  explicit WeightSystem(const std::array<Integer, 4>& weights);
  WeightSystem(long a0, long a1, long a2, long a3);

  /// "1,6,14,21" (any order, whitespace tolerated).
  static WeightSystem parse(std::string_view text);

  const std::array<Integer, 4>& weights() const noexcept { return weights_; }
  const Integer& degree() const noexcept { return degree_; }
  /// Canonical basis of M(a) as rows of a 3x4 matrix.
  const IntMatrix& basis() const noexcept { return basis_; }
  const std::array<std::size_t, 4>& input_order() const noexcept { return input_order_; }

  std::string to_string() const;

  friend bool operator==(const WeightSystem& a, const WeightSystem& b) { return a.weights_ == b.weights_; }

 private:
  std::array<std::size_t, 4> input_order_{0, 1, 2, 3};  // filled while sorting weights_
  std::array<Integer, 4> weights_;
  Integer degree_;
  IntMatrix basis_;
};

/// gcd of every three of the four weights is one.
bool is_well_posed(const std::array<Integer, 4>& weights);

/// Exponents of a monomial W^e0 X^e1 Y^e2 Z^e3.
struct Monomial {
  IntVec4 exponents{0, 0, 0, 0};

  std::string to_string() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exponents <=> b.exponents; }
};

/// Parses the table notation, e.g. "W^3X^7", "WXYZ", "W^{24}".
Monomial parse_monomial(std::string_view text);

Integer weighted_degree(const Monomial& m, const WeightSystem& a);

/// Coordinates of e - (1,1,1,1) in the canonical basis of M(a). Throws
/// ErrorKind::WrongDegree if the monomial is not anticanonical.
IntVec3 monomial_to_point(const Monomial& m, const WeightSystem& a);
/// Inverse of monomial_to_point (exponents may come out negative for points
/// outside the tetrahedron).
Monomial point_to_monomial(const IntVec3& point, const WeightSystem& a);

/// The rational tetrahedron {m in M(a)_R : m_i >= -1}; vertex j has
/// m_i = -1 for every i != j.
Polytope delta_tetrahedron(const WeightSystem& a);

/// All monomials of weighted degree d, lexicographic in exponents.
std::vector<Monomial> anticanonical_monomials(const WeightSystem& a);

/// Convex hull of the lattice points of the tetrahedron. Throws
/// ErrorKind::Degenerate when that hull is not three-dimensional.
Polytope newton_polytope(const WeightSystem& a);

}  // namespace k3iso
