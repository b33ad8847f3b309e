#pragma once

// Rendering of the two count tables. The pre-map family lists every valence
// 1..d_max for the four half-edge-allowing types; the map family lists even
// valences 2..d_max for the four graph-only types. All cells are exact
// decimal; JSON carries them as strings so no consumer ever rounds them.

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "onevertex/formulas.hpp"
#include "onevertex/types.hpp"

namespace onevertex {

enum class TableFamily { premaps, maps };
enum class TableFormat { tsv, csv, json, latex };

struct TableSpec {
  TableFamily family = TableFamily::premaps;
  unsigned d_max = 20;
  TableFormat format = TableFormat::tsv;
};

inline constexpr unsigned kTableMaxValence = 200;

inline std::array<MapType, 4> table_columns(TableFamily family) {
  return family == TableFamily::premaps ? premap_types() : map_types();
}

inline std::vector<unsigned> table_valences(TableFamily family,
                                            unsigned d_max) {
  std::vector<unsigned> rows;
  const unsigned start = family == TableFamily::premaps ? 1 : 2;
  const unsigned step = family == TableFamily::premaps ? 1 : 2;
  for (unsigned d = start; d <= d_max; d += step) rows.push_back(d);
  return rows;
}

struct TableCells {
  std::vector<std::string> columns;           // type codes
  std::vector<unsigned> valences;             // row labels
  std::vector<std::vector<std::string>> rows; // decimal strings, row-major
};

inline TableCells compute_table(TableFamily family, unsigned d_max) {
  if (d_max < 1 || d_max > kTableMaxValence)
    throw std::domain_error("table: d_max must be in 1.." +
                            std::to_string(kTableMaxValence));
  TableCells cells;
  for (MapType t : table_columns(family)) cells.columns.push_back(type_code(t));
  cells.valences = table_valences(family, d_max);
  for (unsigned d : cells.valences) {
    std::vector<std::string> row;
    for (MapType t : table_columns(family))
      row.push_back(premap_count(t, d).str());
    cells.rows.push_back(std::move(row));
  }
  return cells;
}

inline std::string render_table(const TableSpec& spec) {
  const TableCells cells = compute_table(spec.family, spec.d_max);
  std::ostringstream out;
  switch (spec.format) {
    case TableFormat::tsv:
    case TableFormat::csv: {
      const char sep = spec.format == TableFormat::tsv ? '\t' : ',';
      out << 'd';
      for (const auto& c : cells.columns) out << sep << c;
      out << '\n';
      for (std::size_t i = 0; i < cells.rows.size(); ++i) {
        out << cells.valences[i];
        for (const auto& v : cells.rows[i]) out << sep << v;
        out << '\n';
      }
      break;
    }
    case TableFormat::json: {
      nlohmann::json j;
      j["family"] =
          spec.family == TableFamily::premaps ? "premaps" : "maps";
      j["columns"] = cells.columns;
      j["rows"] = nlohmann::json::array();
      for (std::size_t i = 0; i < cells.rows.size(); ++i)
        j["rows"].push_back(
            {{"d", cells.valences[i]}, {"values", cells.rows[i]}});
      out << j.dump(2) << '\n';
      break;
    }
    case TableFormat::latex: {
      out << "\\begin{tabular}{r|rrrr}\n$d$";
      for (const auto& c : cells.columns) out << " & " << c;
      out << " \\\\\n\\hline\n";
      for (std::size_t i = 0; i < cells.rows.size(); ++i) {
        out << cells.valences[i];
        for (const auto& v : cells.rows[i]) out << " & " << v;
        out << " \\\\\n";
      }
      out << "\\end{tabular}\n";
      break;
    }
  }
  return out.str();
}

}  // namespace onevertex
