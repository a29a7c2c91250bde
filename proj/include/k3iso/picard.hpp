#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "k3iso/polytope.hpp"

namespace k3iso {

/// Contribution of one edge pair (E of the Newton polytope, E* of its dual).
struct EdgeTerm {
  std::size_t edge = 0;       ///< index into the Newton polytope's edges
  std::size_t dual_edge = 0;  ///< index into the dual polytope's edges
  std::size_t interior = 0;       ///< l*(E)
  std::size_t dual_interior = 0;  ///< l*(E*)
};

/// Picard number of the minimal model of a generic hypersurface with the
/// given reflexive Newton polytope p:
///
///   rho = l(p*) - 4 - sum_{facets F* of p*} l*(F*) + sum_{edges E* of p*} l*(E*) l*(E)
///
/// where E is the edge of p dual to E*. The last sum is the correction term.
struct PicardBreakdown {
  std::int64_t rho = 0;
  std::int64_t toric_part = 0;
  std::int64_t correction = 0;
  std::size_t dual_points = 0;                  ///< l(p*)
  std::vector<std::size_t> dual_facet_interior;  ///< l*(F*) per facet of p*
  std::vector<EdgeTerm> edge_terms;              ///< nonzero-or-not, one per edge
};

/// Throws ErrorKind::NotReflexive (or the precondition errors of
/// is_reflexive) when p is not a reflexive lattice polytope.
PicardBreakdown picard_rank(const Polytope& p);

/// Rank of L0, the part of the Picard lattice not restricted from the
/// ambient toric resolution: the correction term of picard_rank.
std::int64_t l0_rank(const Polytope& p);

}  // namespace k3iso
