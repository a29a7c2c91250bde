#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "k3iso/exact_linalg.hpp"

namespace k3iso {

/// Facet inequality <normal, x> >= -offset, with an inward primitive normal.
struct Facet {
  IntVec3 normal;
  Rational offset;

  friend bool operator==(const Facet&, const Facet&) = default;
};

/// An edge joins two vertices and is the intersection of two facets.
struct Edge {
  std::size_t v0 = 0, v1 = 0;  // v0 < v1
  std::size_t f0 = 0, f1 = 0;  // f0 < f1

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A full-dimensional convex polytope in R^3 with rational vertices.
///
/// The face lattice is computed once, at construction. Vertices are sorted
/// lexicographically and facets by normal, so two polytopes are equal exactly
/// when their vertex lists are equal.
class Polytope {
 public:
  /// Convex hull of the given points. Throws ErrorKind::Degenerate if they do
  /// not affinely span R^3.
  static Polytope hull(std::span<const RatVec3> points);
  static Polytope hull(std::span<const IntVec3> points);

  const std::vector<RatVec3>& vertices() const noexcept { return vertices_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Indices of the vertices lying on facet f, in ascending order.
  const std::vector<std::size_t>& facet_vertices(std::size_t f) const { return facet_vertices_[f]; }
  /// Indices of the facets containing vertex v, in ascending order.
  const std::vector<std::size_t>& vertex_facets(std::size_t v) const { return vertex_facets_[v]; }
  bool incident(std::size_t f, std::size_t v) const;

  /// Index of the edge cut out by facets f0 and f1, if they meet in an edge.
  std::optional<std::size_t> edge_between_facets(std::size_t f0, std::size_t f1) const;
  std::optional<std::size_t> edge_between_vertices(std::size_t v0, std::size_t v1) const;

  bool is_lattice() const noexcept { return lattice_; }
  /// Integer vertices; throws ErrorKind::NotLattice for rational polytopes.
  std::vector<IntVec3> lattice_vertices() const;

  bool origin_interior() const;
  /// <normal, x> + offset; zero on the facet, positive inside.
  Rational slack(std::size_t f, const RatVec3& x) const;
  Rational slack(std::size_t f, const IntVec3& x) const;
  bool contains_point(const RatVec3& x) const;
  bool contains_point(const IntVec3& x) const;

  friend bool operator==(const Polytope& a, const Polytope& b) { return a.vertices_ == b.vertices_; }

 private:
  Polytope() = default;

  std::vector<RatVec3> vertices_;
  std::vector<Facet> facets_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> facet_vertices_;
  std::vector<std::vector<std::size_t>> vertex_facets_;
  bool lattice_ = true;
};

/// Polar dual together with the incidence-reversing face bijection.
struct PolarPair {
  Polytope dual;
  std::vector<std::size_t> facet_to_dual_vertex;  // indexed by facet of the primal
  std::vector<std::size_t> vertex_to_dual_facet;  // indexed by vertex of the primal
  std::vector<std::size_t> edge_to_dual_edge;     // indexed by edge of the primal
};

/// {y : <x, y> >= -1 for all x in p}. Throws ErrorKind::OriginNotInterior.
PolarPair polar_pair(const Polytope& p);
Polytope polar_dual(const Polytope& p);

/// All facets at lattice distance one from the origin. Requires a lattice
/// polytope with the origin in its interior.
bool is_reflexive(const Polytope& p);

/// Integer points of p in lexicographic order.
std::vector<IntVec3> lattice_points(const Polytope& p);

struct FaceCounts {
  std::size_t total = 0;                  ///< l(p)
  std::size_t interior = 0;               ///< l*(p): points in no facet
  std::vector<std::size_t> facet_interior;  ///< per facet: on it, on no edge
  std::vector<std::size_t> edge_interior;   ///< per edge: strictly between endpoints
};

FaceCounts face_counts(const Polytope& p);

/// True iff every vertex of q satisfies every facet inequality of p.
bool contains(const Polytope& p, const Polytope& q);

/// Image of p under x -> u x.
Polytope transform(const Polytope& p, const IntMatrix& u);

/// Some U in GL(3,Z) with U p = q, or nullopt.
std::optional<IntMatrix> unimodular_equivalent(const Polytope& p, const Polytope& q);

// --- text format ------------------------------------------------------------
// One point per line, three whitespace-separated integers (a/b rationals are
// also accepted); '#' starts a comment.

std::vector<RatVec3> parse_points(std::istream& in);
std::vector<RatVec3> read_points_file(const std::string& path);
void write_points(std::ostream& out, std::span<const RatVec3> points);
void write_points(std::ostream& out, std::span<const IntVec3> points);

}  // namespace k3iso
