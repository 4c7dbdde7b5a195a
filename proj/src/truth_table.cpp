#include "lsyn/truth_table.hpp"

#include <algorithm>
#include <sstream>

namespace lsyn {

char trit_char(Trit t) {
  switch (t) {
    case Trit::zero: return '0';
    case Trit::one: return '1';
    case Trit::dc: return '-';
  }
  throw std::logic_error("bad trit");
}

Trit trit_from_char(char c) {
  switch (c) {
    case '0': return Trit::zero;
    case '1': return Trit::one;
    case '-': return Trit::dc;
    default: throw Error(std::string("invalid value character '") + c + "'");
  }
}

bool TruthTable::has_dc() const {
  return std::find(outputs.begin(), outputs.end(), Trit::dc) != outputs.end();
}

void TruthTable::validate() const {
  check_var_order(order);
  if (order.size() > kMaxTableVars)
    throw Error("too many variables (" + std::to_string(order.size()) + ", limit " +
                std::to_string(kMaxTableVars) + ")");
  if (outputs.size() != (std::size_t{1} << order.size()))
    throw Error("truth table has " + std::to_string(outputs.size()) + " rows, expected " +
                std::to_string(std::size_t{1} << order.size()));
}

TruthTable from_expr(const Expr& e, const VarOrder& order) {
  check_var_order(order);
  if (order.size() > kMaxTableVars)
    throw Error("too many variables (" + std::to_string(order.size()) + ", limit " +
                std::to_string(kMaxTableVars) + ")");
  for (const auto& v : variables(e)) {
    if (std::find(order.begin(), order.end(), v) == order.end())
      throw Error("variable '" + v + "' missing from order");
  }
  TruthTable t;
  t.order = order;
  std::size_t n = order.size();
  auto index = detail::make_var_index(order);
  t.outputs.reserve(std::size_t{1} << n);
  for (std::uint32_t row = 0; row < (std::uint32_t{1} << n); ++row) {
    t.outputs.push_back(detail::evaluate_row(e, index, n, row) ? Trit::one : Trit::zero);
  }
  return t;
}

namespace {

Expr minterm_expr(const TruthTable& t, std::uint32_t row) {
  std::vector<Expr> lits;
  for (std::size_t k = 0; k < t.var_count(); ++k)
    lits.push_back(Expr::lit(t.order[k], TruthTable::row_bit(row, t.var_count(), k)));
  if (lits.size() == 1) return std::move(lits.front());
  return Expr::and_of(std::move(lits));
}

Expr maxterm_expr(const TruthTable& t, std::uint32_t row) {
  std::vector<Expr> lits;
  for (std::size_t k = 0; k < t.var_count(); ++k)
    lits.push_back(Expr::lit(t.order[k], !TruthTable::row_bit(row, t.var_count(), k)));
  if (lits.size() == 1) return std::move(lits.front());
  return Expr::or_of(std::move(lits));
}

}  // namespace

Expr canonical_sop(const TruthTable& t) {
  t.validate();
  if (t.has_dc()) throw Error("canonical SOP undefined for tables with don't-cares");
  if (t.var_count() == 0) return Expr::constant(t.outputs[0] == Trit::one);
  std::vector<Expr> terms;
  for (std::uint32_t row = 0; row < t.row_count(); ++row)
    if (t.outputs[row] == Trit::one) terms.push_back(minterm_expr(t, row));
  if (terms.empty()) return Expr::constant(false);
  if (terms.size() == 1) return std::move(terms.front());
  return Expr::or_of(std::move(terms));
}

Expr canonical_pos(const TruthTable& t) {
  t.validate();
  if (t.has_dc()) throw Error("canonical POS undefined for tables with don't-cares");
  if (t.var_count() == 0) return Expr::constant(t.outputs[0] == Trit::one);
  std::vector<Expr> terms;
  for (std::uint32_t row = 0; row < t.row_count(); ++row)
    if (t.outputs[row] == Trit::zero) terms.push_back(maxterm_expr(t, row));
  if (terms.empty()) return Expr::constant(true);
  if (terms.size() == 1) return std::move(terms.front());
  return Expr::and_of(std::move(terms));
}

std::optional<std::map<std::string, bool>> find_counterexample(const Expr& a, const Expr& b,
                                                               std::size_t var_bound) {
  VarOrder unioned = variables(a);
  for (const auto& v : variables(b)) {
    if (std::find(unioned.begin(), unioned.end(), v) == unioned.end()) unioned.push_back(v);
  }
  if (unioned.size() > var_bound)
    throw Error("equivalence check bound exceeded (" + std::to_string(unioned.size()) +
                " variables > " + std::to_string(var_bound) + ")");
  std::size_t n = unioned.size();
  auto index = detail::make_var_index(unioned);
  for (std::uint32_t row = 0; row < (std::uint32_t{1} << n); ++row) {
    bool va = detail::evaluate_row(a, index, n, row);
    bool vb = detail::evaluate_row(b, index, n, row);
    if (va != vb) {
      std::map<std::string, bool> witness;
      for (std::size_t k = 0; k < n; ++k)
        witness[unioned[k]] = TruthTable::row_bit(row, n, k);
      return witness;
    }
  }
  return std::nullopt;
}

bool equivalent(const Expr& a, const Expr& b, std::size_t var_bound) {
  return !find_counterexample(a, b, var_bound).has_value();
}

std::string write_table_text(const TruthTable& t) {
  t.validate();
  if (t.var_count() == 0) throw Error("cannot write a table with no variables");
  std::ostringstream out;
  for (std::size_t k = 0; k < t.var_count(); ++k) {
    if (k != 0) out << ' ';
    out << t.order[k];
  }
  out << '\n';
  for (std::uint32_t row = 0; row < t.row_count(); ++row) {
    for (std::size_t k = 0; k < t.var_count(); ++k)
      out << (TruthTable::row_bit(row, t.var_count(), k) ? '1' : '0');
    out << ' ' << trit_char(t.outputs[row]) << '\n';
  }
  return out.str();
}

namespace {

// Strips a '#' comment and surrounding whitespace; empty result = skip line.
std::string clean_line(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

TruthTable parse_table_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  TruthTable t;
  bool have_header = false;
  std::vector<bool> seen;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = clean_line(line);
    if (s.empty()) continue;
    auto toks = split_ws(s);
    if (!have_header) {
      t.order = toks;
      check_var_order(t.order);
      if (t.order.size() > kMaxTableVars)
        throw Error("line " + std::to_string(lineno) + ": too many variables");
      t.outputs.assign(std::size_t{1} << t.order.size(), Trit::zero);
      seen.assign(t.outputs.size(), false);
      have_header = true;
      continue;
    }
    if (toks.size() != 2 || toks[0].size() != t.var_count() || toks[1].size() != 1)
      throw Error("line " + std::to_string(lineno) + ": expected '<" +
                  std::to_string(t.var_count()) + " bits> <value>'");
    std::uint32_t row = 0;
    for (char c : toks[0]) {
      if (c != '0' && c != '1')
        throw Error("line " + std::to_string(lineno) + ": row bits must be 0/1");
      row = (row << 1) | static_cast<std::uint32_t>(c == '1');
    }
    if (seen[row]) throw Error("line " + std::to_string(lineno) + ": duplicate row");
    seen[row] = true;
    t.outputs[row] = trit_from_char(toks[1][0]);
  }
  if (!have_header) throw Error("truth table text is empty");
  for (std::size_t row = 0; row < seen.size(); ++row)
    if (!seen[row]) throw Error("missing row " + std::to_string(row));
  return t;
}

}  // namespace lsyn
