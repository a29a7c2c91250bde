#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "k3iso/exact_linalg.hpp"
#include "k3iso/polytope.hpp"
#include "k3iso/weights.hpp"

namespace k3iso {

/// One block of rows of a monomial-transformation table: several weight
/// systems whose vertex monomials correspond column by column.
struct RowRecord {
  int table = 1;
  std::vector<int> ids;
  std::vector<WeightSystem> weights;
  std::vector<Integer> degrees;                  ///< as printed
  std::vector<std::vector<Monomial>> monomials;  ///< [weight][column]
  std::string lattice;
  int rank = 0;
  /// Groups of column indices whose monomials may be exchanged within a row.
  std::vector<std::vector<std::size_t>> bold;

  std::size_t column_count() const { return monomials.empty() ? 0 : monomials.front().size(); }
  /// "14-28-45-51"; rows of the second table get a "T2:" prefix.
  std::string label() const;
  bool has_id(int id) const;
  std::size_t index_of(int id) const;
};

/// An isomorphism M(source) -> M(target), u acting on canonical coordinates.
struct LatticeIso {
  IntMatrix u;
  WeightSystem source;
  WeightSystem target;

  IntVec3 map_point(const IntVec3& c) const { return mat_vec(u, c); }
  /// Image of a degree-zero exponent vector of the source weights.
  IntVec4 map_exponent(const IntVec4& m) const;
  LatticeIso inverse() const;
  /// `next` after `this`.
  LatticeIso then(const LatticeIso& next) const;
};

/// The linear map carrying every column point of weight `from` to the
/// matching column point of weight `to`. Solves on the first three
/// independent columns and checks the rest. Throws InconsistentColumns,
/// RankDeficientColumns or NotUnimodular (and WrongDegree for bad monomials).
LatticeIso derive_iso(const RowRecord& row, std::size_t from, std::size_t to);

/// Column points of weight k in the canonical coordinates of M(a_k).
std::vector<IntVec3> column_points(const RowRecord& row, std::size_t k);

/// Hull of the column points of the first weight. Throws NotReflexive or
/// NotContained when the hull is not reflexive or some image leaves the full
/// Newton polytope of its weight system.
Polytope common_delta(const RowRecord& row);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::string subject;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> values;

  bool passed() const;
  const Check* find(const std::string& name) const;
  const std::string* value(const std::string& key) const;
  void add(std::string name, bool ok, std::string detail = {});
};

void write_text(std::ostream& out, const VerificationReport& report);
/// One `key=value` line per check and value, prefixed by the subject.
void write_kv(std::ostream& out, const VerificationReport& report);

/// Runs every check on one row; failures become report entries, never
/// exceptions.
VerificationReport verify_row(const RowRecord& row);

/// Re-verifies the row under every rearrangement of the bold columns of the
/// non-first weights. Rows without bold groups give an empty report.
VerificationReport verify_swaps(const RowRecord& row);

/// Matrix of the induced linear map between the logarithm spaces of the two
/// tori (the spaces the amoebas live in): the inverse transpose of u.
IntMatrix amoeba_map(const LatticeIso& iso);

struct SearchLimits {
  std::size_t max_depth = 3;
  std::size_t max_results = 64;
};

struct SubPolytope {
  Polytope polytope;
  std::size_t depth = 0;
};

struct SearchResult {
  std::vector<SubPolytope> found;
  /// A limit cut the search short (result cap hit, or unexplored nodes left
  /// at the depth limit).
  bool truncated = false;
  std::size_t explored = 0;
};

/// Breadth-first vertex-deletion search: delete one vertex, take the hull of
/// the remaining lattice points, keep going while the origin stays interior.
/// Reflexive polytopes found are reported once per GL(3,Z) class.
SearchResult search_sub_reflexive(const Polytope& p, const SearchLimits& limits = {});

}  // namespace k3iso
