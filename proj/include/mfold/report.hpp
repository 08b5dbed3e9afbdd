#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace mfold::report {

/// One table cell. Doubles render with 17 significant digits in CSV and as
/// native JSON numbers (shortest round-trip form); both parse back exactly.
using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_g17(double v);

/// Header line plus one line per row. Fields containing a comma, quote, or
/// newline are quoted. Non-finite doubles render as inf/-inf/nan.
std::string to_csv(const Table& t);

/// Array of objects keyed by column name. Non-finite doubles become null
/// (JSON has no representation for them).
nlohmann::json rows_json(const Table& t);

/// Full document: CSV body, or {"meta": ..., "rows": ...} when as_json.
/// Output is a pure function of the inputs; no timestamps or machine state.
std::string render(const Table& t, const nlohmann::json& meta, bool as_json);

/// Writes to the path, or to stdout when path is empty. A relative path is
/// resolved under the MFOLD_OUT_DIR environment variable when that is set.
void write_output(const std::string& text, const std::string& path);

}  // namespace mfold::report
