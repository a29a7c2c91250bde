#include "k3iso/polytope.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace k3iso {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Supporting plane in scaled integer coordinates: <n, P> >= h for all points.
struct Plane {
  IntVec3 n;
  Integer h;
};

IntVec3 orient_towards(IntVec3 m, const IntVec3& probe) {
  if (dot(m, probe) < 0)
    for (auto& x : m) x = -x;
  return m;
}

// Vertices of the planar convex polygon spanned by points[ids] (all on one
// plane with normal n), in cyclic order, collinear points dropped.
std::vector<std::size_t> polygon_hull(const std::vector<IntVec3>& points,
                                      std::vector<std::size_t> ids, const IntVec3& n) {
  std::size_t drop = 0;
  for (std::size_t k = 1; k < 3; ++k)
    if (abs(n[k]) > abs(n[drop])) drop = k;
  const std::size_t ax = drop == 0 ? 1 : 0;
  const std::size_t ay = drop == 2 ? 1 : 2;

  auto less = [&](std::size_t a, std::size_t b) {
    const auto& p = points[a];
    const auto& q = points[b];
    if (p[ax] != q[ax]) return p[ax] < q[ax];
    return p[ay] < q[ay];
  };
  auto turn = [&](std::size_t o, std::size_t a, std::size_t b) {
    const auto& po = points[o];
    const auto& pa = points[a];
    const auto& pb = points[b];
    return Integer((pa[ax] - po[ax]) * (pb[ay] - po[ay]) - (pa[ay] - po[ay]) * (pb[ax] - po[ax]));
  };

  std::sort(ids.begin(), ids.end(), less);
  std::vector<std::size_t> chain(2 * ids.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    while (k >= 2 && turn(chain[k - 2], chain[k - 1], ids[i]) <= 0) --k;
    chain[k++] = ids[i];
  }
  for (std::size_t i = ids.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && turn(chain[k - 2], chain[k - 1], ids[i]) <= 0) --k;
    chain[k++] = ids[i];
  }
  chain.resize(k - 1);
  return chain;
}

// Rotates the plane of facet `facet` around the line (a, b) until it supports
// the point set again. r is a point of the facet off that line.
Plane wrap_edge(const std::vector<IntVec3>& points, const Plane& facet, std::size_t a,
                std::size_t b, std::size_t r) {
  const IntVec3& pa = points[a];
  const IntVec3 axis = points[b] - pa;
  const IntVec3 toward = points[r] - pa;

  std::size_t c = kNone;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (dot(facet.n, points[i]) != facet.h) {
      c = i;
      break;
    }
  IntVec3 m = orient_towards(cross(axis, points[c] - pa), toward);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (dot(m, points[i] - pa) < 0) {
      c = i;
      m = orient_towards(cross(axis, points[c] - pa), toward);
    }
  }
  m = primitive(m);
  return {m, dot(m, pa)};
}

// First supporting plane through the lexicographically smallest point.
Plane initial_facet(const std::vector<IntVec3>& points) {
  const std::size_t a = 0;  // points are sorted, so index 0 is a vertex
  for (std::size_t j = 1; j < points.size(); ++j)
    for (std::size_t k = j + 1; k < points.size(); ++k) {
      IntVec3 n = cross(points[j] - points[a], points[k] - points[a]);
      if (n == IntVec3{0, 0, 0}) continue;
      n = primitive(n);
      const Integer h = dot(n, points[a]);
      bool pos = false, neg = false;
      for (const auto& p : points) {
        Integer s = dot(n, p) - h;
        if (s > 0) pos = true;
        if (s < 0) neg = true;
        if (pos && neg) break;
      }
      if (!neg) return {n, h};
      if (!pos) return {{-n[0], -n[1], -n[2]}, -h};
    }
  throw Error(ErrorKind::Degenerate, "no supporting plane found");
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Primitive integer direction of a rational vector.
IntVec3 integral_direction(const RatVec3& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, Integer(x.get_den()));
  IntVec3 z;
  for (std::size_t i = 0; i < 3; ++i) z[i] = v[i].get_num() * (l / v[i].get_den());
  return primitive(z);
}

}  // namespace

Polytope Polytope::hull(std::span<const IntVec3> points) {
  std::vector<RatVec3> q;
  q.reserve(points.size());
  for (const auto& p : points) q.push_back(to_rational(p));
  return hull(q);
}

Polytope Polytope::hull(std::span<const RatVec3> input) {
  std::vector<RatVec3> uniq(input.begin(), input.end());
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  if (uniq.size() < 4) throw Error(ErrorKind::Degenerate, "fewer than four distinct points");

  Integer scale = 1;
  for (const auto& p : uniq)
    for (const auto& x : p) scale = lcm(scale, Integer(x.get_den()));
  std::vector<IntVec3> pts;
  pts.reserve(uniq.size());
  for (const auto& p : uniq) {
    IntVec3 z;
    for (std::size_t i = 0; i < 3; ++i) z[i] = p[i].get_num() * (scale / p[i].get_den());
    pts.push_back(z);
  }

  {
    std::size_t i1 = kNone, i2 = kNone;
    bool solid = false;
    for (std::size_t i = 1; i < pts.size() && i1 == kNone; ++i)
      if (pts[i] != pts[0]) i1 = i;
    IntVec3 n{0, 0, 0};
    for (std::size_t i = 1; i < pts.size() && i2 == kNone; ++i) {
      n = cross(pts[i1] - pts[0], pts[i] - pts[0]);
      if (n != IntVec3{0, 0, 0}) i2 = i;
    }
    if (i2 != kNone)
      for (std::size_t i = 1; i < pts.size() && !solid; ++i) solid = dot(n, pts[i] - pts[0]) != 0;
    if (!solid) throw Error(ErrorKind::Degenerate, "points do not affinely span R^3");
  }

  std::vector<Plane> planes;
  std::vector<std::vector<std::size_t>> polygons;
  auto find_plane = [&](const Plane& p) {
    for (std::size_t i = 0; i < planes.size(); ++i)
      if (planes[i].n == p.n && planes[i].h == p.h) return i;
    return kNone;
  };

  planes.push_back(initial_facet(pts));
  for (std::size_t f = 0; f < planes.size(); ++f) {
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (dot(planes[f].n, pts[i]) == planes[f].h) on.push_back(i);
    std::vector<std::size_t> poly = polygon_hull(pts, on, planes[f].n);
    const std::size_t m = poly.size();
    for (std::size_t e = 0; e < m; ++e) {
      Plane next = wrap_edge(pts, planes[f], poly[e], poly[(e + 1) % m], poly[(e + 2) % m]);
      if (find_plane(next) == kNone) planes.push_back(next);
    }
    polygons.push_back(std::move(poly));
  }

  std::vector<bool> is_vertex(pts.size(), false);
  for (const auto& poly : polygons)
    for (std::size_t i : poly) is_vertex[i] = true;

  Polytope out;
  std::vector<IntVec3> scaled_vertices;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (is_vertex[i]) {
      out.vertices_.push_back(uniq[i]);
      scaled_vertices.push_back(pts[i]);
    }
  for (const auto& v : out.vertices_)
    for (const auto& x : v)
      if (x.get_den() != 1) out.lattice_ = false;

  std::vector<std::size_t> order(planes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return planes[a].n < planes[b].n; });
  for (std::size_t i : order)
    out.facets_.push_back({planes[i].n, make_rational(-planes[i].h, scale)});

  const std::size_t nv = out.vertices_.size();
  const std::size_t nf = out.facets_.size();
  out.facet_vertices_.assign(nf, {});
  out.vertex_facets_.assign(nv, {});
  for (std::size_t f = 0; f < nf; ++f)
    for (std::size_t v = 0; v < nv; ++v)
      if (dot(planes[order[f]].n, scaled_vertices[v]) == planes[order[f]].h) {
        out.facet_vertices_[f].push_back(v);
        out.vertex_facets_[v].push_back(f);
      }

  for (std::size_t f0 = 0; f0 < nf; ++f0)
    for (std::size_t f1 = f0 + 1; f1 < nf; ++f1) {
      std::vector<std::size_t> shared;
      std::set_intersection(out.facet_vertices_[f0].begin(), out.facet_vertices_[f0].end(),
                            out.facet_vertices_[f1].begin(), out.facet_vertices_[f1].end(),
                            std::back_inserter(shared));
      if (shared.size() == 2) out.edges_.push_back({shared[0], shared[1], f0, f1});
      else if (shared.size() > 2) throw std::logic_error("two facets share more than an edge");
    }
  std::sort(out.edges_.begin(), out.edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.v0, a.v1) < std::tie(b.v0, b.v1);
  });

  if (nv + nf != out.edges_.size() + 2) throw std::logic_error("hull violates Euler's relation");
  return out;
}

bool Polytope::incident(std::size_t f, std::size_t v) const {
  const auto& vs = facet_vertices_[f];
  return std::binary_search(vs.begin(), vs.end(), v);
}

std::optional<std::size_t> Polytope::edge_between_facets(std::size_t f0, std::size_t f1) const {
  if (f0 > f1) std::swap(f0, f1);
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].f0 == f0 && edges_[e].f1 == f1) return e;
  return std::nullopt;
}

std::optional<std::size_t> Polytope::edge_between_vertices(std::size_t v0, std::size_t v1) const {
  if (v0 > v1) std::swap(v0, v1);
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].v0 == v0 && edges_[e].v1 == v1) return e;
  return std::nullopt;
}

std::vector<IntVec3> Polytope::lattice_vertices() const {
  if (!lattice_) throw Error(ErrorKind::NotLattice, "polytope has non-integral vertices");
  std::vector<IntVec3> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(*to_integer(v));
  return out;
}

bool Polytope::origin_interior() const {
  return std::all_of(facets_.begin(), facets_.end(), [](const Facet& f) { return f.offset > 0; });
}

Rational Polytope::slack(std::size_t f, const RatVec3& x) const {
  const auto& n = facets_[f].normal;
  return n[0] * x[0] + n[1] * x[1] + n[2] * x[2] + facets_[f].offset;
}

Rational Polytope::slack(std::size_t f, const IntVec3& x) const {
  return Rational(dot(facets_[f].normal, x)) + facets_[f].offset;
}

bool Polytope::contains_point(const RatVec3& x) const {
  for (std::size_t f = 0; f < facets_.size(); ++f)
    if (slack(f, x) < 0) return false;
  return true;
}

bool Polytope::contains_point(const IntVec3& x) const {
  for (std::size_t f = 0; f < facets_.size(); ++f)
    if (slack(f, x) < 0) return false;
  return true;
}

PolarPair polar_pair(const Polytope& p) {
  if (!p.origin_interior()) throw Error(ErrorKind::OriginNotInterior, "origin is not an interior point");
  const auto& facets = p.facets();
  std::vector<RatVec3> dual_points;
  dual_points.reserve(facets.size());
  for (const auto& f : facets) {
    RatVec3 y;
    for (std::size_t i = 0; i < 3; ++i) y[i] = f.normal[i] / f.offset;
    dual_points.push_back(y);
  }
  PolarPair out{Polytope::hull(dual_points), {}, {}, {}};
  const Polytope& d = out.dual;
  if (d.vertices().size() != facets.size() || d.facets().size() != p.vertices().size())
    throw std::logic_error("polar dual face counts disagree");

  for (const auto& y : dual_points) {
    auto it = std::lower_bound(d.vertices().begin(), d.vertices().end(), y);
    out.facet_to_dual_vertex.push_back(static_cast<std::size_t>(it - d.vertices().begin()));
  }
  for (const auto& v : p.vertices()) {
    const IntVec3 n = integral_direction(v);
    std::size_t found = kNone;
    for (std::size_t g = 0; g < d.facets().size(); ++g)
      if (d.facets()[g].normal == n) found = g;
    if (found == kNone) throw std::logic_error("vertex without dual facet");
    out.vertex_to_dual_facet.push_back(found);
  }
  for (const auto& e : p.edges()) {
    auto de = d.edge_between_vertices(out.facet_to_dual_vertex[e.f0], out.facet_to_dual_vertex[e.f1]);
    if (!de) throw std::logic_error("edge without dual edge");
    auto check = d.edge_between_facets(out.vertex_to_dual_facet[e.v0], out.vertex_to_dual_facet[e.v1]);
    if (check != de) throw std::logic_error("dual edge incidence mismatch");
    out.edge_to_dual_edge.push_back(*de);
  }
  return out;
}

Polytope polar_dual(const Polytope& p) { return polar_pair(p).dual; }

bool is_reflexive(const Polytope& p) {
  if (!p.is_lattice()) throw Error(ErrorKind::NotLattice, "reflexivity needs a lattice polytope");
  if (!p.origin_interior()) throw Error(ErrorKind::OriginNotInterior, "origin is not an interior point");
  return std::all_of(p.facets().begin(), p.facets().end(), [](const Facet& f) { return f.offset == 1; });
}

std::vector<IntVec3> lattice_points(const Polytope& p) {
  IntVec3 lo, hi;
  for (std::size_t i = 0; i < 3; ++i) {
    Rational mn = p.vertices()[0][i], mx = mn;
    for (const auto& v : p.vertices()) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = ceil_of(mn);
    hi[i] = floor_of(mx);
  }
  // <n, x> is an integer, so <n, x> >= -offset becomes <n, x> >= ceil(-offset).
  std::vector<Integer> bound;
  for (const auto& f : p.facets()) bound.push_back(ceil_of(-f.offset));

  std::vector<IntVec3> out;
  IntVec3 x;
  for (x[0] = lo[0]; x[0] <= hi[0]; ++x[0])
    for (x[1] = lo[1]; x[1] <= hi[1]; ++x[1])
      for (x[2] = lo[2]; x[2] <= hi[2]; ++x[2]) {
        bool inside = true;
        for (std::size_t f = 0; f < bound.size() && inside; ++f)
          inside = dot(p.facets()[f].normal, x) >= bound[f];
        if (inside) out.push_back(x);
      }
  return out;
}

FaceCounts face_counts(const Polytope& p) {
  FaceCounts c;
  c.facet_interior.assign(p.facets().size(), 0);
  c.edge_interior.assign(p.edges().size(), 0);
  for (const auto& x : lattice_points(p)) {
    ++c.total;
    std::vector<std::size_t> tight;
    for (std::size_t f = 0; f < p.facets().size(); ++f)
      if (p.slack(f, x) == 0) tight.push_back(f);
    if (tight.empty()) {
      ++c.interior;
    } else if (tight.size() == 1) {
      ++c.facet_interior[tight[0]];
    } else if (tight.size() == 2) {
      auto e = p.edge_between_facets(tight[0], tight[1]);
      if (!e) throw std::logic_error("point on two facets but on no edge");
      ++c.edge_interior[*e];
    }
  }
  return c;
}

bool contains(const Polytope& p, const Polytope& q) {
  for (const auto& v : q.vertices())
    if (!p.contains_point(v)) return false;
  return true;
}

Polytope transform(const Polytope& p, const IntMatrix& u) {
  std::vector<RatVec3> image;
  image.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) image.push_back(mat_vec(u, v));
  return Polytope::hull(image);
}

namespace {

std::vector<std::size_t> vertex_degrees(const Polytope& p) {
  std::vector<std::size_t> deg(p.vertices().size(), 0);
  for (const auto& e : p.edges()) {
    ++deg[e.v0];
    ++deg[e.v1];
  }
  return deg;
}

std::vector<Integer> edge_lengths(const Polytope& p, const std::vector<IntVec3>& verts) {
  std::vector<Integer> out;
  for (const auto& e : p.edges()) {
    IntVec3 d = verts[e.v1] - verts[e.v0];
    out.push_back(content(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> sorted_offsets(const Polytope& p) {
  std::vector<Rational> out;
  for (const auto& f : p.facets()) out.push_back(f.offset);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<IntMatrix> unimodular_equivalent(const Polytope& p, const Polytope& q) {
  const auto pv = p.lattice_vertices();
  const auto qv = q.lattice_vertices();
  if (pv.size() != qv.size() || p.facets().size() != q.facets().size() ||
      p.edges().size() != q.edges().size())
    return std::nullopt;
  if (sorted_offsets(p) != sorted_offsets(q) || edge_lengths(p, pv) != edge_lengths(q, qv))
    return std::nullopt;

  // A linearly independent vertex triple of p fixes U once its image is chosen.
  std::array<std::size_t, 3> base{kNone, kNone, kNone};
  for (std::size_t i = 0; i < pv.size() && base[0] == kNone; ++i)
    for (std::size_t j = i + 1; j < pv.size() && base[0] == kNone; ++j)
      for (std::size_t k = j + 1; k < pv.size(); ++k)
        if (dot(cross(pv[i], pv[j]), pv[k]) != 0) {
          base = {i, j, k};
          break;
        }
  if (base[0] == kNone) return std::nullopt;

  RatMatrix basis(3, 3);
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t r = 0; r < 3; ++r) basis(r, c) = pv[base[c]][r];
  const RatMatrix basis_inv = *inverse(basis);

  const auto pdeg = vertex_degrees(p);
  const auto qdeg = vertex_degrees(q);
  const std::vector<IntVec3> target(qv.begin(), qv.end());  // already sorted

  for (std::size_t a = 0; a < qv.size(); ++a) {
    if (qdeg[a] != pdeg[base[0]]) continue;
    for (std::size_t b = 0; b < qv.size(); ++b) {
      if (b == a || qdeg[b] != pdeg[base[1]]) continue;
      for (std::size_t c = 0; c < qv.size(); ++c) {
        if (c == a || c == b || qdeg[c] != pdeg[base[2]]) continue;
        RatMatrix image(3, 3);
        const std::array<std::size_t, 3> pick{a, b, c};
        for (std::size_t col = 0; col < 3; ++col)
          for (std::size_t r = 0; r < 3; ++r) image(r, col) = qv[pick[col]][r];
        auto u = to_integer(image * basis_inv);
        if (!u || !is_unimodular(*u)) continue;
        std::vector<IntVec3> mapped;
        mapped.reserve(pv.size());
        for (const auto& v : pv) mapped.push_back(mat_vec(*u, v));
        std::sort(mapped.begin(), mapped.end());
        if (mapped == target) return u;
      }
    }
  }
  return std::nullopt;
}

std::vector<RatVec3> parse_points(std::istream& in) {
  std::vector<RatVec3> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() != 3)
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected three coordinates");
    RatVec3 p;
    for (std::size_t i = 0; i < 3; ++i) {
      if (tokens[i].find_first_not_of("+-0123456789/") != std::string::npos ||
          p[i].set_str(tokens[i], 10) != 0 || p[i].get_den() == 0)
        throw Error(ErrorKind::Parse,
                    "line " + std::to_string(lineno) + ": bad coordinate '" + tokens[i] + "'");
      p[i].canonicalize();
    }
    out.push_back(p);
  }
  return out;
}

std::vector<RatVec3> read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  return parse_points(in);
}

void write_points(std::ostream& out, std::span<const RatVec3> points) {
  for (const auto& p : points) out << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
}

void write_points(std::ostream& out, std::span<const IntVec3> points) {
  for (const auto& p : points) out << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
}

}  // namespace k3iso
