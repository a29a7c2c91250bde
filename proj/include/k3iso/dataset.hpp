#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "k3iso/correspondence.hpp"

namespace k3iso {

/// The shipped table rows (data/rows.json, compiled in).
std::string_view embedded_dataset();

/// Parses the JSON row dataset. Throws ErrorKind::Dataset on any structural
/// problem; monomial degrees are deliberately not checked here.
std::vector<RowRecord> parse_dataset(std::string_view json_text);
std::vector<RowRecord> load_dataset_file(const std::string& path);
const std::vector<RowRecord>& builtin_rows();

/// First row of the given table whose ids are exactly `ids`.
const RowRecord& find_row(const std::vector<RowRecord>& rows, const std::vector<int>& ids, int table = 1);

}  // namespace k3iso
