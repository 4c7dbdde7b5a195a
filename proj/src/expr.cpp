#include "lsyn/expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

namespace lsyn {

void check_var_order(const VarOrder& order) {
  std::set<std::string> seen;
  for (const auto& name : order) {
    if (name.empty()) throw Error("variable names must be non-empty");
    if (!seen.insert(name).second) throw Error("duplicate variable '" + name + "' in order");
  }
}

Expr Expr::constant(bool value) {
  Expr e;
  e.kind_ = ExprKind::constant;
  e.value_ = value;
  return e;
}

Expr Expr::var(std::string name) {
  if (name.empty()) throw std::invalid_argument("variable name must be non-empty");
  Expr e;
  e.kind_ = ExprKind::variable;
  e.name_ = std::move(name);
  return e;
}

Expr Expr::lit(std::string name, bool positive) {
  Expr v = var(std::move(name));
  return positive ? v : not_of(std::move(v));
}

Expr Expr::not_of(Expr operand) {
  Expr e;
  e.kind_ = ExprKind::op_not;
  e.operands_.push_back(std::move(operand));
  return e;
}

Expr Expr::and_of(std::vector<Expr> operands) {
  if (operands.size() < 2) throw std::invalid_argument("AND needs >= 2 operands");
  Expr e;
  e.kind_ = ExprKind::op_and;
  for (auto& op : operands) {
    if (op.kind_ == ExprKind::op_and) {
      for (auto& sub : op.operands_) e.operands_.push_back(std::move(sub));
    } else {
      e.operands_.push_back(std::move(op));
    }
  }
  return e;
}

Expr Expr::or_of(std::vector<Expr> operands) {
  if (operands.size() < 2) throw std::invalid_argument("OR needs >= 2 operands");
  Expr e;
  e.kind_ = ExprKind::op_or;
  for (auto& op : operands) {
    if (op.kind_ == ExprKind::op_or) {
      for (auto& sub : op.operands_) e.operands_.push_back(std::move(sub));
    } else {
      e.operands_.push_back(std::move(op));
    }
  }
  return e;
}

Expr Expr::xor_of(std::vector<Expr> operands) {
  if (operands.size() < 2) throw std::invalid_argument("XOR needs >= 2 operands");
  Expr e;
  e.kind_ = ExprKind::op_xor;
  for (auto& op : operands) {
    if (op.kind_ == ExprKind::op_xor) {
      for (auto& sub : op.operands_) e.operands_.push_back(std::move(sub));
    } else {
      e.operands_.push_back(std::move(op));
    }
  }
  return e;
}

Expr Expr::xnor_of(std::vector<Expr> operands) {
  if (operands.size() < 2) throw std::invalid_argument("XNOR needs >= 2 operands");
  Expr e;
  e.kind_ = ExprKind::op_xnor;
  e.operands_ = std::move(operands);
  return e;
}

Expr Expr::nand_of(std::vector<Expr> operands) {
  if (operands.size() < 2) throw std::invalid_argument("NAND needs >= 2 operands");
  Expr e;
  e.kind_ = ExprKind::op_nand;
  e.operands_ = std::move(operands);
  return e;
}

Expr Expr::nor_of(std::vector<Expr> operands) {
  if (operands.size() < 2) throw std::invalid_argument("NOR needs >= 2 operands");
  Expr e;
  e.kind_ = ExprKind::op_nor;
  e.operands_ = std::move(operands);
  return e;
}

bool Expr::const_value() const {
  if (kind_ != ExprKind::constant) throw std::logic_error("const_value on non-constant");
  return value_;
}

const std::string& Expr::name() const {
  if (kind_ != ExprKind::variable) throw std::logic_error("name on non-variable");
  return name_;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Parser {
  const std::string& text;
  const VarOrder* alphabet;  // nullptr: free single-letter mode
  bool multi;                // greedy identifiers, AND needs a separator
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos + 1); }

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }

  bool starts_primary() const {
    if (eof()) return false;
    char c = peek();
    return c == '(' || c == '0' || c == '1' || is_ident_start(c);
  }

  Expr parse_variable() {
    std::size_t start = pos;
    std::string name;
    if (multi) {
      while (!eof() && is_ident_char(peek())) name.push_back(text[pos++]);
    } else {
      name.push_back(text[pos++]);
    }
    if (alphabet != nullptr &&
        std::find(alphabet->begin(), alphabet->end(), name) == alphabet->end()) {
      pos = start;
      fail("unknown variable '" + name + "'");
    }
    return Expr::var(std::move(name));
  }

  Expr parse_primary() {
    skip_ws();
    if (eof()) fail("unexpected end of input");
    char c = peek();
    if (c == '(') {
      ++pos;
      Expr e = parse_or();
      skip_ws();
      if (eof() || peek() != ')') fail("expected ')'");
      ++pos;
      return e;
    }
    if (c == '0' || c == '1') {
      ++pos;
      return Expr::constant(c == '1');
    }
    if (is_ident_start(c)) return parse_variable();
    fail(std::string("unexpected character '") + c + "'");
  }

  Expr parse_factor() {
    Expr e = parse_primary();
    while (!eof() && peek() == '\'') {  // postfix NOT binds tightest
      ++pos;
      e = Expr::not_of(std::move(e));
    }
    return e;
  }

  Expr parse_and() {
    std::vector<Expr> terms;
    terms.push_back(parse_factor());
    for (;;) {
      skip_ws();
      if (!eof() && peek() == '.') {
        ++pos;
        terms.push_back(parse_factor());
      } else if (starts_primary()) {
        terms.push_back(parse_factor());
      } else {
        break;
      }
    }
    if (terms.size() == 1) return std::move(terms.front());
    return Expr::and_of(std::move(terms));
  }

  Expr parse_xor() {
    std::vector<Expr> terms;
    terms.push_back(parse_and());
    for (;;) {
      skip_ws();
      if (!eof() && peek() == '^') {
        ++pos;
        terms.push_back(parse_and());
      } else {
        break;
      }
    }
    if (terms.size() == 1) return std::move(terms.front());
    return Expr::xor_of(std::move(terms));
  }

  Expr parse_or() {
    std::vector<Expr> terms;
    terms.push_back(parse_xor());
    for (;;) {
      skip_ws();
      if (!eof() && peek() == '+') {
        ++pos;
        terms.push_back(parse_xor());
      } else {
        break;
      }
    }
    if (terms.size() == 1) return std::move(terms.front());
    return Expr::or_of(std::move(terms));
  }

  Expr run() {
    skip_ws();
    if (eof()) fail("empty expression");
    Expr e = parse_or();
    skip_ws();
    if (!eof()) fail(std::string("unexpected character '") + peek() + "'");
    return e;
  }
};

}  // namespace

Expr parse_expr(const std::string& text) {
  Parser p{text, nullptr, false};
  return p.run();
}

Expr parse_expr(const std::string& text, const VarOrder& alphabet) {
  check_var_order(alphabet);
  bool multi = std::any_of(alphabet.begin(), alphabet.end(),
                           [](const std::string& s) { return s.size() > 1; });
  Parser p{text, &alphabet, multi};
  return p.run();
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

// OR binds loosest, then XOR, then AND; atoms and postfix forms are 3.
int precedence(ExprKind k) {
  switch (k) {
    case ExprKind::op_or: return 0;
    case ExprKind::op_xor: return 1;
    case ExprKind::op_and: return 2;
    default: return 3;
  }
}

void collect_vars(const Expr& e, VarOrder& out, std::set<std::string>& seen) {
  if (e.kind() == ExprKind::variable) {
    if (seen.insert(e.name()).second) out.push_back(e.name());
    return;
  }
  for (const auto& op : e.operands()) collect_vars(op, out, seen);
}

struct Renderer {
  bool dotted;  // '.'-separated AND operands (multi-character names present)

  std::string nary(const std::vector<Expr>& ops, ExprKind kind) const {
    const char* sep = kind == ExprKind::op_or    ? " + "
                      : kind == ExprKind::op_xor ? " ^ "
                      : dotted                   ? "."
                                                 : "";
    int need = precedence(kind);
    std::string out;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (i != 0) out += sep;
      std::string part = render_node(ops[i]);
      if (precedence(ops[i].kind()) < need) part = "(" + part + ")";
      out += part;
    }
    return out;
  }

  std::string render_node(const Expr& e) const {
    switch (e.kind()) {
      case ExprKind::constant:
        return e.const_value() ? "1" : "0";
      case ExprKind::variable:
        return e.name();
      case ExprKind::op_not: {
        const Expr& inner = e.operands().front();
        std::string body = render_node(inner);
        if (precedence(inner.kind()) < 3) body = "(" + body + ")";
        return body + "'";
      }
      case ExprKind::op_and:
      case ExprKind::op_or:
      case ExprKind::op_xor:
        return nary(e.operands(), e.kind());
      case ExprKind::op_nand:
        return "(" + nary(e.operands(), ExprKind::op_and) + ")'";
      case ExprKind::op_nor:
        return "(" + nary(e.operands(), ExprKind::op_or) + ")'";
      case ExprKind::op_xnor:
        return "(" + nary(e.operands(), ExprKind::op_xor) + ")'";
    }
    throw std::logic_error("unhandled expression kind");
  }
};

}  // namespace

std::string render(const Expr& e) {
  VarOrder vars = variables(e);
  bool dotted = std::any_of(vars.begin(), vars.end(),
                            [](const std::string& s) { return s.size() > 1; });
  return Renderer{dotted}.render_node(e);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

template <typename Lookup>
bool eval_impl(const Expr& e, const Lookup& lookup) {
  switch (e.kind()) {
    case ExprKind::constant:
      return e.const_value();
    case ExprKind::variable:
      return lookup(e.name());
    case ExprKind::op_not:
      return !eval_impl(e.operands().front(), lookup);
    case ExprKind::op_and:
    case ExprKind::op_nand: {
      bool all = true;
      for (const auto& op : e.operands()) all = eval_impl(op, lookup) && all;
      return e.kind() == ExprKind::op_and ? all : !all;
    }
    case ExprKind::op_or:
    case ExprKind::op_nor: {
      bool any = false;
      for (const auto& op : e.operands()) any = eval_impl(op, lookup) || any;
      return e.kind() == ExprKind::op_or ? any : !any;
    }
    case ExprKind::op_xor:
    case ExprKind::op_xnor: {
      bool odd = false;
      for (const auto& op : e.operands()) odd ^= eval_impl(op, lookup);
      return e.kind() == ExprKind::op_xor ? odd : !odd;
    }
  }
  throw std::logic_error("unhandled expression kind");
}

}  // namespace

bool evaluate(const Expr& e, const std::map<std::string, bool>& assignment) {
  return eval_impl(e, [&](const std::string& name) {
    auto it = assignment.find(name);
    if (it == assignment.end()) throw Error("missing variable '" + name + "' in assignment");
    return it->second;
  });
}

VarOrder variables(const Expr& e) {
  VarOrder out;
  std::set<std::string> seen;
  collect_vars(e, out, seen);
  return out;
}

namespace detail {

VarIndex make_var_index(const VarOrder& order) {
  VarIndex index;
  for (std::size_t k = 0; k < order.size(); ++k) index.emplace(order[k], k);
  return index;
}

bool evaluate_row(const Expr& e, const VarIndex& index, std::size_t var_count,
                  std::uint32_t row) {
  return eval_impl(e, [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw Error("missing variable '" + name + "' in order");
    return ((row >> (var_count - 1 - it->second)) & 1u) != 0;
  });
}

}  // namespace detail

}  // namespace lsyn
