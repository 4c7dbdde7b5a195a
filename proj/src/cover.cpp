#include "lsyn/cover.hpp"

#include <algorithm>
#include <bit>

namespace lsyn {

Cube Cube::from_chars(const std::string& s) {
  if (s.empty() || s.size() > 32) throw Error("invalid cube '" + s + "'");
  Cube c;
  std::size_t n = s.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::uint32_t bit = std::uint32_t{1} << (n - 1 - k);
    switch (s[k]) {
      case '-': break;
      case '0': c.mask |= bit; break;
      case '1': c.mask |= bit; c.value |= bit; break;
      default: throw Error(std::string("invalid cube character '") + s[k] + "'");
    }
  }
  return c;
}

std::string Cube::to_chars(std::size_t var_count) const {
  std::string s(var_count, '-');
  for (std::size_t k = 0; k < var_count; ++k) {
    switch (state(var_count, k)) {
      case LitState::absent: break;
      case LitState::pos: s[k] = '1'; break;
      case LitState::neg: s[k] = '0'; break;
    }
  }
  return s;
}

std::size_t Cube::literal_count() const { return static_cast<std::size_t>(std::popcount(mask)); }

bool display_less(const Cube& a, const Cube& b, std::size_t var_count) {
  auto rank = [](LitState s) {
    switch (s) {
      case LitState::neg: return 0;
      case LitState::pos: return 1;
      case LitState::absent: return 2;
    }
    return 3;
  };
  for (std::size_t k = 0; k < var_count; ++k) {
    int ra = rank(a.state(var_count, k));
    int rb = rank(b.state(var_count, k));
    if (ra != rb) return ra < rb;
  }
  return false;
}

namespace {

std::vector<Expr> cube_literals(const Cube& c, const VarOrder& order, bool flip) {
  std::vector<Expr> lits;
  for (std::size_t k = 0; k < order.size(); ++k) {
    switch (c.state(order.size(), k)) {
      case LitState::absent: break;
      case LitState::pos: lits.push_back(Expr::lit(order[k], !flip)); break;
      case LitState::neg: lits.push_back(Expr::lit(order[k], flip)); break;
    }
  }
  return lits;
}

}  // namespace

Expr derive_term(const Cube& c, const VarOrder& order) {
  auto lits = cube_literals(c, order, false);
  if (lits.empty()) return Expr::constant(true);
  if (lits.size() == 1) return std::move(lits.front());
  return Expr::and_of(std::move(lits));
}

Expr derive_sum_term(const Cube& c, const VarOrder& order) {
  auto lits = cube_literals(c, order, false);
  if (lits.empty()) return Expr::constant(false);
  if (lits.size() == 1) return std::move(lits.front());
  return Expr::or_of(std::move(lits));
}

bool Cover::eval(std::uint32_t row) const {
  if (form == CoverForm::sop) {
    for (const auto& c : cubes)
      if (c.covers(row)) return true;
    return false;
  }
  for (const auto& c : cubes)
    if (!c.sum_true(row)) return false;
  return true;
}

std::size_t Cover::literal_count() const {
  std::size_t total = 0;
  for (const auto& c : cubes) total += c.literal_count();
  return total;
}

Expr Cover::to_expr() const {
  if (form == CoverForm::sop) {
    if (cubes.empty()) return Expr::constant(false);
    std::vector<Expr> terms;
    for (const auto& c : cubes) terms.push_back(derive_term(c, order));
    if (terms.size() == 1) return std::move(terms.front());
    return Expr::or_of(std::move(terms));
  }
  if (cubes.empty()) return Expr::constant(true);
  std::vector<Expr> terms;
  for (const auto& c : cubes) terms.push_back(derive_sum_term(c, order));
  if (terms.size() == 1) return std::move(terms.front());
  return Expr::and_of(std::move(terms));
}

std::string Cover::to_string() const {
  if (form == CoverForm::sop) return render(to_expr());
  if (cubes.empty()) return "1";
  if (cubes.size() == 1 && cubes.front().mask == 0) return "0";
  std::string out;
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    if (i != 0) out += '.';
    out += "(" + render(derive_sum_term(cubes[i], order)) + ")";
  }
  return out;
}

namespace {

Cube term_to_cube(const Expr& term, const VarOrder& order, bool sum_term) {
  std::vector<Expr> lits;
  ExprKind joiner = sum_term ? ExprKind::op_or : ExprKind::op_and;
  if (term.kind() == joiner)
    lits = term.operands();
  else
    lits.push_back(term);

  Cube cube;
  std::size_t n = order.size();
  for (const auto& lit : lits) {
    bool positive = lit.kind() == ExprKind::variable;
    if (!positive &&
        (lit.kind() != ExprKind::op_not ||
         lit.operands().front().kind() != ExprKind::variable))
      throw Error("expression is not in two-level form: '" + render(term) +
                  "' is not a literal " + (sum_term ? "sum" : "product"));
    const std::string& name = positive ? lit.name() : lit.operands().front().name();
    auto it = std::find(order.begin(), order.end(), name);
    if (it == order.end()) throw Error("variable '" + name + "' missing from order");
    std::size_t k = static_cast<std::size_t>(it - order.begin());
    std::uint32_t bit = std::uint32_t{1} << (n - 1 - k);
    std::uint32_t polarity = positive ? bit : 0;
    if ((cube.mask & bit) && (cube.value & bit) != polarity)
      throw Error("term '" + render(term) + "' uses '" + name + "' in both polarities");
    cube.mask |= bit;
    cube.value |= polarity;
  }
  return cube;
}

}  // namespace

Cover cover_from_expr(const Expr& e, const VarOrder& order, CoverForm form) {
  check_var_order(order);
  Cover c;
  c.form = form;
  c.order = order;
  bool sop = form == CoverForm::sop;
  if (e.kind() == ExprKind::constant) {
    // constant 1 as SOP / constant 0 as POS carry one degenerate term
    if (e.const_value() == sop) c.cubes.push_back(Cube{});
    return c;
  }
  ExprKind top = sop ? ExprKind::op_or : ExprKind::op_and;
  std::vector<Expr> terms;
  if (e.kind() == top)
    terms = e.operands();
  else
    terms.push_back(e);
  for (const auto& term : terms) c.cubes.push_back(term_to_cube(term, order, !sop));
  c.validate();
  return c;
}

void Cover::validate() const {
  check_var_order(order);
  if (order.size() > kMaxTableVars) throw Error("cover has too many variables");
  std::uint32_t full = (std::uint32_t{1} << order.size()) - 1;
  for (const auto& c : cubes) {
    if ((c.mask & ~full) || (c.value & ~c.mask))
      throw Error("malformed cube in cover");
  }
}

}  // namespace lsyn
