#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "lsyn/truth_table.hpp"

namespace lsyn {

enum class CoverForm : unsigned char { sop, pos };

/// Literal state of one variable within a term, as written: in a POS sum
/// term (A' + C), A is `neg` and C is `pos`.
enum class LitState : unsigned char { absent, pos, neg };

/// One product (or sum) term over n variables, encoded as a (mask, value)
/// bit pair. Variable k uses bit (n-1-k), matching the row encoding: bit set
/// in mask = literal present, matching bit of value = polarity. A cube with
/// k absent variables covers exactly 2^k rows.
struct Cube {
  std::uint32_t mask = 0;
  std::uint32_t value = 0;

  static Cube minterm(std::uint32_t row, std::size_t var_count) {
    std::uint32_t full = (var_count == 32) ? ~0u : ((std::uint32_t{1} << var_count) - 1);
    return Cube{full, row & full};
  }

  /// Parses/produces the PLA-style string, first variable leftmost:
  /// '1' positive, '0' negative, '-' absent.
  static Cube from_chars(const std::string& s);
  std::string to_chars(std::size_t var_count) const;

  LitState state(std::size_t var_count, std::size_t k) const {
    std::uint32_t bit = std::uint32_t{1} << (var_count - 1 - k);
    if (!(mask & bit)) return LitState::absent;
    return (value & bit) ? LitState::pos : LitState::neg;
  }

  /// Row match in the product sense: all present literals agree with the row.
  bool covers(std::uint32_t row) const { return (row & mask) == value; }

  /// Truth of the cube read as a sum term: some present literal agrees.
  bool sum_true(std::uint32_t row) const { return (~(row ^ value) & mask) != 0; }

  std::size_t literal_count() const;

  /// Canonical (mask, value) order, used for deterministic tie-breaking.
  auto operator<=>(const Cube&) const = default;
};

/// Reading order for printed covers: compare variables left to right with
/// negative < positive < absent, so A'B' precedes AC' and AB precedes BC.
bool display_less(const Cube& a, const Cube& b, std::size_t var_count);

/// Product term for an SOP cube: AND of the present literals; the universal
/// cube is the constant 1.
Expr derive_term(const Cube& c, const VarOrder& order);

/// Sum term for a POS cube: OR of the present literals; the empty sum is
/// the constant 0.
Expr derive_sum_term(const Cube& c, const VarOrder& order);

/// Two-level form: OR of product terms (SOP) or AND of sum terms (POS).
struct Cover {
  CoverForm form = CoverForm::sop;
  VarOrder order;
  std::vector<Cube> cubes;

  std::size_t var_count() const { return order.size(); }
  bool eval(std::uint32_t row) const;
  std::size_t literal_count() const;

  Expr to_expr() const;

  /// SOP covers render like the expression; POS covers wrap every sum term
  /// in parentheses and join with '.', e.g. "(A + B').(C)".
  std::string to_string() const;

  void validate() const;
};

/// Reads a syntactically two-level expression into a cover without any
/// minimization: an OR of product terms for SOP, an AND of sum terms for
/// POS; single terms, lone literals and the constants 0/1 also qualify.
/// Throws Error when the expression has deeper structure or a term repeats
/// a variable with both polarities.
Cover cover_from_expr(const Expr& e, const VarOrder& order, CoverForm form);

}  // namespace lsyn
