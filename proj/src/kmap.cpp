#include "lsyn/kmap.hpp"

#include <algorithm>
#include <sstream>

namespace lsyn {

namespace {

// Gray sequences used for the map axes.
const std::vector<std::uint32_t>& gray_values(std::size_t bits) {
  static const std::vector<std::uint32_t> one = {0, 1};
  static const std::vector<std::uint32_t> two = {0, 1, 3, 2};  // 00 01 11 10
  return bits == 1 ? one : two;
}

std::string bit_label(std::uint32_t value, std::size_t bits) {
  std::string s(bits, '0');
  for (std::size_t i = 0; i < bits; ++i)
    if ((value >> (bits - 1 - i)) & 1u) s[i] = '1';
  return s;
}

std::string join_names(const VarOrder& names) {
  bool multi = false;
  for (const auto& n : names)
    if (n.size() > 1) multi = true;
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i != 0 && multi) out += ',';
    out += names[i];
  }
  return out;
}

}  // namespace

KmapGrid kmap_render(const TruthTable& t) {
  t.validate();
  std::size_t n = t.var_count();
  if (n < 2 || n > 4)
    throw Error("K-maps support 2 to 4 variables, got " + std::to_string(n));
  std::size_t row_bits = n / 2;      // 1, 1, 2
  std::size_t col_bits = n - row_bits;

  KmapGrid g;
  g.row_vars.assign(t.order.begin(), t.order.begin() + row_bits);
  g.col_vars.assign(t.order.begin() + row_bits, t.order.end());
  for (auto rv : gray_values(row_bits)) g.row_labels.push_back(bit_label(rv, row_bits));
  for (auto cv : gray_values(col_bits)) g.col_labels.push_back(bit_label(cv, col_bits));

  for (auto rv : gray_values(row_bits)) {
    std::vector<Trit> cell_row;
    std::vector<std::uint32_t> index_row;
    for (auto cv : gray_values(col_bits)) {
      std::uint32_t row = (rv << col_bits) | cv;
      cell_row.push_back(t.outputs[row]);
      index_row.push_back(row);
    }
    g.cells.push_back(std::move(cell_row));
    g.rows.push_back(std::move(index_row));
  }
  return g;
}

std::string kmap_text(const KmapGrid& g) {
  std::string corner = join_names(g.row_vars) + "\\" + join_names(g.col_vars);
  std::size_t label_w = corner.size();
  for (const auto& r : g.row_labels) label_w = std::max(label_w, r.size());

  std::ostringstream out;
  out << corner << std::string(label_w - corner.size(), ' ');
  for (const auto& c : g.col_labels) out << "  " << c;
  out << '\n';
  for (std::size_t r = 0; r < g.row_labels.size(); ++r) {
    out << g.row_labels[r] << std::string(label_w - g.row_labels[r].size(), ' ');
    for (std::size_t c = 0; c < g.col_labels.size(); ++c) {
      out << "  " << std::string(g.col_labels[c].size() - 1, ' ')
          << trit_char(g.cells[r][c]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace lsyn
