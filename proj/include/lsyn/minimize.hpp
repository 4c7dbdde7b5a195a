#pragma once

#include "lsyn/cover.hpp"

namespace lsyn {

enum class Strategy : unsigned char { exact, greedy };

struct MinimizeOptions {
  Strategy strategy = Strategy::exact;
  /// EXACT is forced down to GREEDY above this many variables; exact cover
  /// selection is NP-hard and this keeps the default behaviour bounded.
  std::size_t exact_var_limit = 16;
};

/// True when the options resolve to an exact run for an n-variable table.
bool exact_applies(std::size_t var_count, const MinimizeOptions& opts);

/// Complete set of prime implicants by iterative pairwise merging of cubes
/// that differ in exactly one literal. 1-rows and don't-care rows both seed
/// the expansion and both count as coverable, so primality is with respect
/// to the ON u DC set. Returned in canonical (mask, value) order.
std::vector<Cube> prime_implicants(const TruthTable& t);

/// Minimum SOP cover of the table's 1-rows by the given primes (don't-cares
/// need not be covered). EXACT finds the fewest cubes, breaking ties by
/// fewest literals and then the lexicographically smallest cube list; GREEDY
/// takes essentials, then repeatedly the prime covering the most uncovered
/// rows (same tie order), and prunes redundant picks. Throws Error if some
/// 1-row is uncoverable. Resulting cubes are in display order.
Cover select_cover(const std::vector<Cube>& primes, const TruthTable& t, Strategy strategy);

/// prime_implicants + select_cover; for POS the complement is minimized and
/// each product cube dualized into a sum term.
Cover minimize_cover(const TruthTable& t, CoverForm form, const MinimizeOptions& opts = {});

/// Minimized expression; a constant function yields "0"/"1".
Expr minimize_sop(const TruthTable& t, const MinimizeOptions& opts = {});
Expr minimize_pos(const TruthTable& t, const MinimizeOptions& opts = {});

}  // namespace lsyn
