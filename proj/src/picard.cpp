#include "k3iso/picard.hpp"

#include <numeric>

namespace k3iso {

PicardBreakdown picard_rank(const Polytope& p) {
  if (!is_reflexive(p)) throw Error(ErrorKind::NotReflexive, "Picard rank needs a reflexive polytope");
  const PolarPair pair = polar_pair(p);
  const FaceCounts primal = face_counts(p);
  const FaceCounts dual = face_counts(pair.dual);

  PicardBreakdown b;
  b.dual_points = dual.total;
  b.dual_facet_interior = dual.facet_interior;
  const std::size_t facet_sum =
      std::accumulate(dual.facet_interior.begin(), dual.facet_interior.end(), std::size_t{0});
  b.toric_part = static_cast<std::int64_t>(dual.total) - 4 - static_cast<std::int64_t>(facet_sum);

  for (std::size_t e = 0; e < p.edges().size(); ++e) {
    EdgeTerm t;
    t.edge = e;
    t.dual_edge = pair.edge_to_dual_edge[e];
    t.interior = primal.edge_interior[e];
    t.dual_interior = dual.edge_interior[t.dual_edge];
    b.correction += static_cast<std::int64_t>(t.interior * t.dual_interior);
    b.edge_terms.push_back(t);
  }
  b.rho = b.toric_part + b.correction;
  return b;
}

std::int64_t l0_rank(const Polytope& p) { return picard_rank(p).correction; }

}  // namespace k3iso
