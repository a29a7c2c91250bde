#include "k3iso/correspondence.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "k3iso/picard.hpp"

namespace k3iso {

std::string RowRecord::label() const {
  std::string s = table == 2 ? "T2:" : "";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "-" : "") + std::to_string(ids[i]);
  return s;
}

bool RowRecord::has_id(int id) const { return std::find(ids.begin(), ids.end(), id) != ids.end(); }

std::size_t RowRecord::index_of(int id) const {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end()) throw std::out_of_range("No. " + std::to_string(id) + " is not in row " + label());
  return static_cast<std::size_t>(it - ids.begin());
}

IntVec4 LatticeIso::map_exponent(const IntVec4& m) const {
  return from_coords(map_point(to_coords(m, source.basis())), target.basis());
}

LatticeIso LatticeIso::inverse() const {
  auto inv = to_integer(*k3iso::inverse(to_rational(u)));
  if (!inv) throw Error(ErrorKind::NotUnimodular, "lattice map has no integral inverse");
  return {*inv, target, source};
}

LatticeIso LatticeIso::then(const LatticeIso& next) const {
  if (!(next.source == target)) throw std::invalid_argument("composing maps with mismatched weights");
  return {next.u * u, source, next.target};
}

std::vector<IntVec3> column_points(const RowRecord& row, std::size_t k) {
  std::vector<IntVec3> pts;
  pts.reserve(row.column_count());
  for (const auto& m : row.monomials.at(k)) pts.push_back(monomial_to_point(m, row.weights.at(k)));
  return pts;
}

LatticeIso derive_iso(const RowRecord& row, std::size_t from, std::size_t to) {
  const auto src = column_points(row, from);
  const auto dst = column_points(row, to);

  std::vector<std::size_t> pick;
  for (std::size_t j = 0; j < src.size() && pick.size() < 3; ++j) {
    RatMatrix trial(pick.size() + 1, 3);
    for (std::size_t r = 0; r < pick.size(); ++r)
      for (std::size_t c = 0; c < 3; ++c) trial(r, c) = src[pick[r]][c];
    for (std::size_t c = 0; c < 3; ++c) trial(pick.size(), c) = src[j][c];
    if (rank(trial) == pick.size() + 1) pick.push_back(j);
  }
  if (pick.size() < 3)
    throw Error(ErrorKind::RankDeficientColumns,
                "row " + row.label() + ": fewer than three independent columns");

  RatMatrix s(3, 3), t(3, 3);
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t r = 0; r < 3; ++r) {
      s(r, c) = src[pick[c]][r];
      t(r, c) = dst[pick[c]][r];
    }
  const RatMatrix map = t * *inverse(s);

  for (std::size_t j = 0; j < src.size(); ++j) {
    for (std::size_t r = 0; r < 3; ++r) {
      Rational image = map(r, 0) * src[j][0] + map(r, 1) * src[j][1] + map(r, 2) * src[j][2];
      if (image != dst[j][r])
        throw Error(ErrorKind::InconsistentColumns,
                    "row " + row.label() + ": column " + std::to_string(j) + " (" +
                        row.monomials[from][j].to_string() + " <-> " + row.monomials[to][j].to_string() +
                        ") does not fit the map determined by the other columns");
    }
  }
  auto u = to_integer(map);
  if (!u)
    throw Error(ErrorKind::NotUnimodular, "row " + row.label() + ": column map is not integral");
  if (!is_unimodular(*u))
    throw Error(ErrorKind::NotUnimodular,
                "row " + row.label() + ": column map has determinant " + determinant(*u).get_str());
  return {*u, row.weights[from], row.weights[to]};
}

Polytope common_delta(const RowRecord& row) {
  for (std::size_t k = 1; k < row.weights.size(); ++k) derive_iso(row, 0, k);
  Polytope delta = Polytope::hull(column_points(row, 0));
  if (!delta.origin_interior() || !is_reflexive(delta))
    throw Error(ErrorKind::NotReflexive, "row " + row.label() + ": common polytope is not reflexive");
  for (std::size_t k = 0; k < row.weights.size(); ++k) {
    const Polytope image = Polytope::hull(column_points(row, k));
    if (!contains(newton_polytope(row.weights[k]), image))
      throw Error(ErrorKind::NotContained, "row " + row.label() + ": polytope leaves the Newton polytope of No. " +
                                               std::to_string(row.ids[k]));
  }
  return delta;
}

// --- reports -----------------------------------------------------------------

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const std::string* VerificationReport::value(const std::string& key) const {
  for (const auto& [k, v] : values)
    if (k == key) return &v;
  return nullptr;
}

void VerificationReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

void write_text(std::ostream& out, const VerificationReport& report) {
  out << "== " << report.subject << ": " << (report.passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& c : report.checks) {
    out << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
  for (const auto& [k, v] : report.values) out << "  " << k << " = " << v << '\n';
}

void write_kv(std::ostream& out, const VerificationReport& report) {
  const std::string& s = report.subject;
  out << s << ".status=" << (report.passed() ? "pass" : "fail") << '\n';
  for (const auto& c : report.checks) {
    out << s << ".check." << c.name << '=' << (c.passed ? "pass" : "fail");
    if (!c.detail.empty()) out << ';' << c.detail;
    out << '\n';
  }
  for (const auto& [k, v] : report.values) out << s << '.' << k << '=' << v << '\n';
}

namespace {

std::string id_name(const RowRecord& row, std::size_t k) { return std::to_string(row.ids[k]); }

void check_degrees(const RowRecord& row, VerificationReport& rep) {
  std::vector<std::string> bad;
  for (std::size_t k = 0; k < row.weights.size(); ++k) {
    const auto& a = row.weights[k];
    if (k < row.degrees.size() && row.degrees[k] != a.degree())
      bad.push_back("No. " + id_name(row, k) + " printed degree " + row.degrees[k].get_str() + " != " +
                    a.degree().get_str());
    for (std::size_t j = 0; j < row.monomials[k].size(); ++j) {
      const Integer deg = weighted_degree(row.monomials[k][j], a);
      if (deg != a.degree())
        bad.push_back("No. " + id_name(row, k) + " column " + std::to_string(j) + " " +
                      row.monomials[k][j].to_string() + " has degree " + deg.get_str() + " != " +
                      a.degree().get_str());
    }
  }
  std::string detail;
  for (const auto& b : bad) detail += (detail.empty() ? "" : "; ") + b;
  rep.add("degree", bad.empty(), detail);
}

}  // namespace

VerificationReport verify_row(const RowRecord& row) {
  VerificationReport rep;
  rep.subject = row.label();
  check_degrees(row, rep);

  std::vector<std::optional<LatticeIso>> from_first(row.weights.size());
  for (std::size_t k = 1; k < row.weights.size(); ++k) {
    const std::string pair = id_name(row, 0) + "->" + id_name(row, k);
    try {
      const LatticeIso iso = derive_iso(row, 0, k);
      rep.add("iso:" + pair, true, to_string(iso.u));
      rep.add("unimodular:" + pair, is_unimodular(iso.u), "det=" + determinant(iso.u).get_str());
      const LatticeIso back = derive_iso(row, k, 0);
      rep.add("inverse:" + pair, back.u == iso.inverse().u);
      from_first[k] = iso;
    } catch (const std::exception& e) {
      rep.add("iso:" + pair, false, e.what());
    }
  }
  for (std::size_t k = 1; k < row.weights.size(); ++k)
    for (std::size_t l = k + 1; l < row.weights.size(); ++l) {
      const std::string path = id_name(row, 0) + "->" + id_name(row, k) + "->" + id_name(row, l);
      if (!from_first[k] || !from_first[l]) {
        rep.add("path:" + path, false, "missing isomorphism");
        continue;
      }
      try {
        const LatticeIso direct = derive_iso(row, k, l);
        const bool same = from_first[k]->then(direct).u == from_first[l]->u;
        rep.add("path:" + path, same);
      } catch (const std::exception& e) {
        rep.add("path:" + path, false, e.what());
      }
    }

  std::optional<Polytope> delta;
  try {
    delta = Polytope::hull(column_points(row, 0));
    const bool refl = delta->origin_interior() && is_reflexive(*delta);
    rep.add("reflexive", refl);
    rep.values.emplace_back("delta.vertices", std::to_string(delta->vertices().size()));
    rep.values.emplace_back("delta.points", std::to_string(lattice_points(*delta).size()));
    if (!refl) delta.reset();
  } catch (const std::exception& e) {
    rep.add("reflexive", false, e.what());
    delta.reset();
  }

  for (std::size_t k = 0; k < row.weights.size(); ++k) {
    const std::string id = id_name(row, k);
    try {
      const Polytope newton = newton_polytope(row.weights[k]);
      const Polytope image = Polytope::hull(column_points(row, k));
      rep.add("contained:" + id, contains(newton, image));
      const auto rho = picard_rank(newton).rho;
      rep.values.emplace_back("rho.newton." + id, std::to_string(rho));
      rep.add("rank-newton:" + id, rho == row.rank, "rho=" + std::to_string(rho));
    } catch (const std::exception& e) {
      rep.add("contained:" + id, false, e.what());
    }
  }

  if (delta) {
    const PicardBreakdown b = picard_rank(*delta);
    rep.values.emplace_back("rho.delta", std::to_string(b.rho));
    rep.values.emplace_back("l0.delta", std::to_string(b.correction));
    rep.add("rank-delta", b.rho == row.rank,
            "rho=" + std::to_string(b.rho) + " table=" + std::to_string(row.rank));
  } else {
    rep.add("rank-delta", false, "no reflexive common polytope");
  }
  return rep;
}

VerificationReport verify_swaps(const RowRecord& row) {
  VerificationReport rep;
  rep.subject = row.label();
  for (const auto& group : row.bold) {
    std::vector<std::size_t> perm(group.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<std::vector<std::size_t>> perms;
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    // One permutation per non-first weight; index 0 of `perms` is the identity.
    const std::size_t others = row.weights.size() - 1;
    std::vector<std::size_t> choice(others, 0);
    while (true) {
      std::size_t pos = 0;
      while (pos < others && ++choice[pos] == perms.size()) choice[pos++] = 0;
      if (pos == others) break;

      RowRecord variant = row;
      variant.bold.clear();
      std::string name = "swap";
      for (std::size_t w = 0; w < others; ++w) {
        if (choice[w] == 0) continue;
        const auto& p = perms[choice[w]];
        auto& cols = variant.monomials[w + 1];
        name += " " + id_name(row, w + 1) + ":";
        for (std::size_t i = 0; i < group.size(); ++i) {
          cols[group[i]] = row.monomials[w + 1][group[p[i]]];
          name += (i ? "," : "") + cols[group[i]].to_string();
        }
      }
      const VerificationReport sub = verify_row(variant);
      std::string detail;
      for (const auto& c : sub.checks)
        if (!c.passed) detail += (detail.empty() ? "" : "; ") + c.name + (c.detail.empty() ? "" : " " + c.detail);
      rep.add(name, sub.passed(), detail);
    }
  }
  return rep;
}

IntMatrix amoeba_map(const LatticeIso& iso) { return iso.inverse().u.transpose(); }

// --- vertex-deletion search -------------------------------------------------

namespace {

struct Fingerprint {
  std::size_t vertices, facets, points;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

}  // namespace

SearchResult search_sub_reflexive(const Polytope& p, const SearchLimits& limits) {
  if (!p.is_lattice()) throw Error(ErrorKind::NotLattice, "search needs a lattice polytope");
  if (!p.origin_interior()) throw Error(ErrorKind::OriginNotInterior, "origin is not an interior point");

  SearchResult result;
  std::vector<Fingerprint> prints;
  std::set<std::vector<RatVec3>> visited{p.vertices()};
  std::vector<Polytope> frontier{p};

  for (std::size_t depth = 1; depth <= limits.max_depth && !frontier.empty(); ++depth) {
    std::vector<Polytope> next;
    for (const auto& node : frontier) {
      ++result.explored;
      const auto points = lattice_points(node);
      for (const auto& v : node.lattice_vertices()) {
        std::vector<IntVec3> rest;
        rest.reserve(points.size());
        for (const auto& x : points)
          if (x != v) rest.push_back(x);
        std::optional<Polytope> child;
        try {
          child = Polytope::hull(rest);
        } catch (const Error&) {
          continue;
        }
        if (!child->origin_interior() || !visited.insert(child->vertices()).second) continue;
        next.push_back(*child);
        if (!is_reflexive(*child)) continue;

        const Fingerprint fp{child->vertices().size(), child->facets().size(), lattice_points(*child).size()};
        bool known = false;
        for (std::size_t i = 0; i < result.found.size() && !known; ++i)
          known = prints[i] == fp && unimodular_equivalent(result.found[i].polytope, *child).has_value();
        if (known) continue;
        result.found.push_back({*child, depth});
        prints.push_back(fp);
        if (result.found.size() >= limits.max_results) {
          result.truncated = true;
          return result;
        }
      }
    }
    frontier = std::move(next);
  }
  result.truncated = result.truncated || !frontier.empty();
  return result;
}

}  // namespace k3iso
