#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsyn/expr.hpp"

namespace lsyn {

/// Table/cover cell value. `dc` marks a don't-care row the minimizer may
/// exploit; the canonical-form operations reject it.
enum class Trit : unsigned char { zero = 0, one = 1, dc = 2 };

char trit_char(Trit t);              // '0', '1', '-'
Trit trit_from_char(char c);         // throws Error on anything else

/// Hard cap on table width; row indices are 32-bit and exhaustive scans are
/// the equivalence oracle, so anything wider is rejected up front.
inline constexpr std::size_t kMaxTableVars = 24;

/// Single-output truth table. Row index i assigns variable k the bit
/// (n-1-k) of i: the first variable in the order is the MSB.
struct TruthTable {
  VarOrder order;
  std::vector<Trit> outputs;  // length 2^n, row-index order

  std::size_t var_count() const { return order.size(); }
  std::uint32_t row_count() const { return std::uint32_t{1} << order.size(); }
  bool has_dc() const;

  static bool row_bit(std::uint32_t row, std::size_t var_count, std::size_t k) {
    return ((row >> (var_count - 1 - k)) & 1u) != 0;
  }

  /// Checks the order and the 2^n output length; throws Error.
  void validate() const;
};

/// Evaluates e on every row. `order` must cover variables(e) (extras fine).
TruthTable from_expr(const Expr& e, const VarOrder& order);

/// Sum of one full minterm per 1-row, ascending row order. Empty sum is the
/// constant 0. Rejects tables with don't-cares.
Expr canonical_sop(const TruthTable& t);

/// Product of one maxterm per 0-row, ascending row order; a variable appears
/// uncomplemented in a maxterm iff its bit in the row is 0. Empty product is
/// the constant 1. Rejects tables with don't-cares.
Expr canonical_pos(const TruthTable& t);

/// Exhaustive equivalence over the union of both variable sets (a's
/// variables first, then b's unseen ones). Throws Error when the union
/// exceeds var_bound.
bool equivalent(const Expr& a, const Expr& b, std::size_t var_bound = kMaxTableVars);

/// Like equivalent, but returns a witness assignment where the two differ.
std::optional<std::map<std::string, bool>> find_counterexample(
    const Expr& a, const Expr& b, std::size_t var_bound = kMaxTableVars);

/// Text format: a header line of variable names, then one "bits value" line
/// per row with value in {0,1,-}. Rows may appear in any order but each must
/// appear exactly once.
std::string write_table_text(const TruthTable& t);
TruthTable parse_table_text(const std::string& text);

}  // namespace lsyn
