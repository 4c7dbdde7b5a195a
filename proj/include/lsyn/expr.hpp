#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lsyn/error.hpp"

namespace lsyn {

/// Ordered list of distinct variable names. The first variable is the most
/// significant bit of a truth-table row index, so F(0,1,1) over [A,B,C] is
/// row 3.
using VarOrder = std::vector<std::string>;

/// Throws Error if the order contains duplicates or empty names.
void check_var_order(const VarOrder& order);

enum class ExprKind : unsigned char {
  constant,
  variable,
  op_not,
  op_and,
  op_or,
  op_xor,
  op_xnor,
  op_nand,
  op_nor,
};

/// Boolean expression tree. Plain value type; AND/OR/XOR chains are stored
/// n-ary and the factories flatten nested chains of the same kind, so
/// AND(A, AND(B, C)) and AND(A, B, C) are the same value.
class Expr {
 public:
  static Expr constant(bool value);
  static Expr var(std::string name);
  /// Literal helper: the variable or its negation.
  static Expr lit(std::string name, bool positive);
  static Expr not_of(Expr operand);
  static Expr and_of(std::vector<Expr> operands);
  static Expr or_of(std::vector<Expr> operands);
  static Expr xor_of(std::vector<Expr> operands);
  static Expr xnor_of(std::vector<Expr> operands);
  static Expr nand_of(std::vector<Expr> operands);
  static Expr nor_of(std::vector<Expr> operands);

  ExprKind kind() const { return kind_; }
  bool const_value() const;
  const std::string& name() const;
  const std::vector<Expr>& operands() const { return operands_; }

  bool operator==(const Expr&) const = default;

 private:
  Expr() = default;

  ExprKind kind_ = ExprKind::constant;
  bool value_ = false;
  std::string name_;
  std::vector<Expr> operands_;
};

/// Parses the expression syntax used throughout the toolkit.
///
/// Precedence, loosest first: '+' (OR), '^' (XOR), AND (juxtaposition or
/// '.'), postfix apostrophe (NOT). Parentheses group; '0' and '1' are
/// constants. Without an alphabet every variable is a single letter, so
/// "ABC" is a three-way AND. With an alphabet containing a multi-character
/// name, identifiers are read greedily and AND operands must be separated
/// by '.' or whitespace ("Qa.Qb'" or "Qa Qb'").
Expr parse_expr(const std::string& text);
Expr parse_expr(const std::string& text, const VarOrder& alphabet);

/// Inverse of parse_expr on the parseable subset. NAND/NOR/XNOR have no
/// dedicated operator and render as the negated base form, e.g. "(AB)'".
std::string render(const Expr& e);

/// Evaluates under a complete assignment; throws Error on a missing variable.
bool evaluate(const Expr& e, const std::map<std::string, bool>& assignment);

/// Distinct variables in first-appearance (depth-first) order.
VarOrder variables(const Expr& e);

namespace detail {

using VarIndex = std::map<std::string, std::size_t>;

VarIndex make_var_index(const VarOrder& order);

/// Evaluates with variable k bound to bit (n-1-k) of row.
bool evaluate_row(const Expr& e, const VarIndex& index, std::size_t var_count,
                  std::uint32_t row);

}  // namespace detail

}  // namespace lsyn
