#pragma once

#include <string>
#include <vector>

#include "lsyn/truth_table.hpp"

namespace lsyn {

/// Karnaugh-map view of a 2/3/4-variable table. Rows take the leading
/// variables, columns the trailing ones, both in Gray order so that every
/// horizontal/vertical neighbour (with wraparound) differs in one variable.
/// 3 variables: rows A in {0,1}, columns BC in {00,01,11,10}.
/// 4 variables: rows AB and columns CD, both {00,01,11,10}.
struct KmapGrid {
  VarOrder row_vars;
  VarOrder col_vars;
  std::vector<std::string> row_labels;  // Gray-ordered bit strings
  std::vector<std::string> col_labels;
  std::vector<std::vector<Trit>> cells;          // [row][col]
  std::vector<std::vector<std::uint32_t>> rows;  // table row index per cell
};

/// Builds the grid; only 2-4 variables are supported (wider functions go
/// straight to the tabular minimizer).
KmapGrid kmap_render(const TruthTable& t);

/// Fixed-width text rendering, documentation output only.
std::string kmap_text(const KmapGrid& g);

}  // namespace lsyn
