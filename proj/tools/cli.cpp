#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <future>
#include <ostream>
#include <regex>
#include <set>

#include "k3iso/correspondence.hpp"
#include "k3iso/dataset.hpp"
#include "k3iso/picard.hpp"
#include "k3iso/polytope.hpp"
#include "k3iso/weights.hpp"

namespace k3iso::cli {

namespace {

struct RunConfig {
  std::string format = "text";
  std::string data_path;
  int row = 0;
  bool parallel = false;
  std::string target;  // file or weights
  std::size_t max_depth = 3;
  std::size_t max_results = 64;
  int from = 0;
  int to = 0;
};

bool looks_like_weights(const std::string& s) {
  static const std::regex re(R"(\s*\d+\s*(,\s*\d+\s*){3})");
  return std::regex_match(s, re) && !std::filesystem::exists(s);
}

Polytope load_polytope(const std::string& target) {
  if (looks_like_weights(target)) return newton_polytope(WeightSystem::parse(target));
  return Polytope::hull(read_points_file(target));
}

void describe(std::ostream& out, const Polytope& p) {
  out << "# vertices=" << p.vertices().size() << " edges=" << p.edges().size()
      << " facets=" << p.facets().size() << " points=" << lattice_points(p).size() << '\n';
}

std::vector<RowRecord> rows_for(const RunConfig& cfg) {
  return cfg.data_path.empty() ? builtin_rows() : load_dataset_file(cfg.data_path);
}

void list_rows(std::ostream& err, const std::vector<RowRecord>& rows) {
  std::set<int> ids;
  for (const auto& r : rows) ids.insert(r.ids.begin(), r.ids.end());
  err << "available row ids:";
  for (int id : ids) err << ' ' << id;
  err << '\n';
}

int verify_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto rows = rows_for(cfg);
  std::vector<const RowRecord*> selected;
  for (const auto& r : rows)
    if (cfg.row == 0 || r.has_id(cfg.row)) selected.push_back(&r);
  if (selected.empty()) {
    err << "no row contains No. " << cfg.row << '\n';
    list_rows(err, rows);
    return kUsage;
  }

  auto run_one = [](const RowRecord* r) { return r->table == 2 ? verify_swaps(*r) : verify_row(*r); };
  std::vector<VerificationReport> reports;
  if (cfg.parallel) {
    std::vector<std::future<VerificationReport>> jobs;
    for (const auto* r : selected) jobs.push_back(std::async(std::launch::async, run_one, r));
    for (auto& j : jobs) reports.push_back(j.get());
  } else {
    for (const auto* r : selected) reports.push_back(run_one(r));
  }

  std::size_t failed = 0;
  for (const auto& rep : reports) {
    if (!rep.passed()) ++failed;
    if (cfg.format == "kv") write_kv(out, rep);
    else write_text(out, rep);
  }
  if (cfg.format == "kv")
    out << "summary.rows=" << reports.size() << "\nsummary.failed=" << failed << '\n';
  else
    out << reports.size() << " row reports, " << failed << " failed\n";
  return failed == 0 ? kOk : kFailed;
}

int newton(const RunConfig& cfg, std::ostream& out) {
  const WeightSystem a = WeightSystem::parse(cfg.target);
  const Polytope p = newton_polytope(a);
  out << "# P(" << a.to_string() << ") degree " << a.degree() << '\n';
  describe(out, p);
  write_points(out, p.vertices());
  return kOk;
}

int dual(const RunConfig& cfg, std::ostream& out) {
  const Polytope d = polar_dual(load_polytope(cfg.target));
  describe(out, d);
  write_points(out, d.vertices());
  return kOk;
}

int reflexive(const RunConfig& cfg, std::ostream& out) {
  const Polytope p = load_polytope(cfg.target);
  out << "reflexive=" << (is_reflexive(p) ? "true" : "false") << '\n';
  return kOk;
}

int points(const RunConfig& cfg, std::ostream& out) {
  const Polytope p = load_polytope(cfg.target);
  describe(out, p);
  write_points(out, lattice_points(p));
  return kOk;
}

int picard(const RunConfig& cfg, std::ostream& out) {
  const PicardBreakdown b = picard_rank(load_polytope(cfg.target));
  out << "rho=" << b.rho << " toric=" << b.toric_part << " correction=" << b.correction << '\n';
  if (cfg.format == "kv") {
    out << "dual_points=" << b.dual_points << '\n';
    for (const auto& t : b.edge_terms)
      if (t.interior * t.dual_interior != 0)
        out << "edge." << t.edge << "=" << t.interior << "x" << t.dual_interior << '\n';
  }
  return kOk;
}

int search_sub(const RunConfig& cfg, std::ostream& out) {
  const Polytope p = load_polytope(cfg.target);
  const SearchResult res = search_sub_reflexive(p, {cfg.max_depth, cfg.max_results});
  out << "# found=" << res.found.size() << " truncated=" << (res.truncated ? 1 : 0)
      << " explored=" << res.explored << '\n';
  std::size_t i = 0;
  for (const auto& r : res.found) {
    const PicardBreakdown b = picard_rank(r.polytope);
    out << "# result " << ++i << " depth=" << r.depth << " vertices=" << r.polytope.vertices().size()
        << " points=" << lattice_points(r.polytope).size() << " rho=" << b.rho << " l0=" << b.correction
        << '\n';
    write_points(out, r.polytope.vertices());
  }
  return kOk;
}

int amoeba(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto rows = rows_for(cfg);
  for (const auto& r : rows) {
    if (r.table != 1 || !r.has_id(cfg.row) || !r.has_id(cfg.from) || !r.has_id(cfg.to)) continue;
    const LatticeIso iso = derive_iso(r, r.index_of(cfg.from), r.index_of(cfg.to));
    const IntMatrix a = amoeba_map(iso);
    out << "row=" << r.label() << " from=" << cfg.from << " to=" << cfg.to << '\n';
    out << "lattice=" << iso.u << '\n';
    out << "amoeba=" << a << '\n';
    out << "det=" << determinant(a) << '\n';
    return kOk;
  }
  err << "no table row contains Nos. " << cfg.row << ", " << cfg.from << " and " << cfg.to << '\n';
  list_rows(err, rows);
  return kUsage;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse:
    case ErrorKind::Dataset:
    case ErrorKind::NotWellPosed:
    case ErrorKind::Degenerate:
      return kUsage;
    default:
      return kFailed;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice-polytope checks for monomial maps between weighted K3 families", "k3iso"};
  app.require_subcommand(1, 1);
  RunConfig cfg;

  auto* verify = app.add_subcommand("verify-table", "verify the shipped correspondence rows");
  verify->add_option("--row", cfg.row, "only rows containing this family number");
  verify->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "kv"}));
  verify->add_option("--data", cfg.data_path, "row dataset (JSON) to use instead of the built-in one");
  verify->add_flag("--parallel", cfg.parallel, "verify rows concurrently");

  auto* newton_cmd = app.add_subcommand("newton", "vertices of the full Newton polytope");
  newton_cmd->add_option("weights", cfg.target, "A0,A1,A2,A3")->required();

  auto* dual_cmd = app.add_subcommand("dual", "polar dual of a polytope file");
  dual_cmd->add_option("file", cfg.target)->required();

  auto* refl_cmd = app.add_subcommand("reflexive", "reflexivity of a polytope file");
  refl_cmd->add_option("file", cfg.target)->required();

  auto* points_cmd = app.add_subcommand("points", "lattice points of a polytope file");
  points_cmd->add_option("file", cfg.target)->required();

  auto* picard_cmd = app.add_subcommand("picard", "Picard number for a polytope file or weights");
  picard_cmd->add_option("target", cfg.target, "FILE or A0,A1,A2,A3")->required();
  picard_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "kv"}));

  auto* search_cmd = app.add_subcommand("search-sub", "reflexive subpolytopes by vertex deletion");
  search_cmd->add_option("target", cfg.target, "A0,A1,A2,A3 or FILE")->required();
  search_cmd->add_option("--max-depth", cfg.max_depth)->capture_default_str();
  search_cmd->add_option("--max-results", cfg.max_results)->capture_default_str();

  auto* amoeba_cmd = app.add_subcommand("amoeba", "lattice and amoeba maps between two families of a row");
  amoeba_cmd->add_option("--row", cfg.row)->required();
  amoeba_cmd->add_option("--from", cfg.from)->required();
  amoeba_cmd->add_option("--to", cfg.to)->required();
  amoeba_cmd->add_option("--data", cfg.data_path);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return verify_table(cfg, out, err);
    if (*newton_cmd) return newton(cfg, out);
    if (*dual_cmd) return dual(cfg, out);
    if (*refl_cmd) return reflexive(cfg, out);
    if (*points_cmd) return points(cfg, out);
    if (*picard_cmd) return picard(cfg, out);
    if (*search_cmd) return search_sub(cfg, out);
    if (*amoeba_cmd) return amoeba(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

}  // namespace k3iso::cli
