#include "k3iso/dataset.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace k3iso {

namespace {

using nlohmann::json;

Error bad(const std::string& where, const std::string& why) {
  return Error(ErrorKind::Dataset, where + ": " + why);
}

RowRecord parse_row(const json& j, std::size_t index) {
  const std::string where = "row " + std::to_string(index);
  if (!j.is_object()) throw bad(where, "not an object");
  for (const char* key : {"ids", "weights", "columns", "lattice", "rank"})
    if (!j.contains(key)) throw bad(where, std::string("missing field '") + key + "'");

  RowRecord row;
  row.table = j.value("table", 1);
  row.ids = j.at("ids").get<std::vector<int>>();
  for (const auto& w : j.at("weights")) {
    const auto a = w.get<std::vector<long>>();
    if (a.size() != 4) throw bad(where, "every weight system needs four entries");
    try {
      row.weights.emplace_back(a[0], a[1], a[2], a[3]);
    } catch (const Error& e) {
      throw bad(where, e.what());
    }
  }
  if (j.contains("degree"))
    for (long d : j.at("degree").get<std::vector<long>>()) row.degrees.emplace_back(d);
  for (const auto& col : j.at("columns")) {
    std::vector<Monomial> ms;
    for (const auto& text : col.get<std::vector<std::string>>()) {
      try {
        ms.push_back(parse_monomial(text));
      } catch (const Error& e) {
        throw bad(where, e.what());
      }
    }
    row.monomials.push_back(std::move(ms));
  }
  row.lattice = j.at("lattice").get<std::string>();
  row.rank = j.at("rank").get<int>();
  if (j.contains("bold")) row.bold = j.at("bold").get<std::vector<std::vector<std::size_t>>>();

  if (row.ids.size() != row.weights.size() || row.monomials.size() != row.weights.size())
    throw bad(where, "ids, weights and columns disagree in length");
  if (!row.degrees.empty() && row.degrees.size() != row.weights.size())
    throw bad(where, "degree list has the wrong length");
  if (row.weights.empty()) throw bad(where, "no weights");
  for (const auto& ms : row.monomials)
    if (ms.size() != row.column_count()) throw bad(where, "ragged columns");
  for (const auto& g : row.bold)
    for (std::size_t c : g)
      if (c >= row.column_count()) throw bad(where, "bold column out of range");
  return row;
}

}  // namespace

std::vector<RowRecord> parse_dataset(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Dataset, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc.at("rows").is_array())
    throw Error(ErrorKind::Dataset, "expected an object with a 'rows' array");
  std::vector<RowRecord> rows;
  std::size_t i = 0;
  for (const auto& r : doc.at("rows")) {
    try {
      rows.push_back(parse_row(r, i++));
    } catch (const json::exception& e) {
      throw Error(ErrorKind::Dataset, "row " + std::to_string(i - 1) + ": " + e.what());
    }
  }
  return rows;
}

std::vector<RowRecord> load_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Dataset, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_dataset(ss.str());
}

const std::vector<RowRecord>& builtin_rows() {
  static const std::vector<RowRecord> rows = parse_dataset(embedded_dataset());
  return rows;
}

const RowRecord& find_row(const std::vector<RowRecord>& rows, const std::vector<int>& ids, int table) {
  for (const auto& r : rows)
    if (r.table == table && r.ids == ids) return r;
  throw std::out_of_range("no such row");
}

}  // namespace k3iso
