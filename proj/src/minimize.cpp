#include "lsyn/minimize.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>

namespace lsyn {

bool exact_applies(std::size_t var_count, const MinimizeOptions& opts) {
  return opts.strategy == Strategy::exact && var_count <= opts.exact_var_limit;
}

std::vector<Cube> prime_implicants(const TruthTable& t) {
  t.validate();
  std::vector<Cube> current;
  for (std::uint32_t row = 0; row < t.row_count(); ++row)
    if (t.outputs[row] != Trit::zero) current.push_back(Cube::minterm(row, t.var_count()));

  std::set<Cube> primes;
  while (!current.empty()) {
    std::vector<bool> merged(current.size(), false);
    std::set<Cube> next;
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        if (current[i].mask != current[j].mask) continue;
        std::uint32_t diff = current[i].value ^ current[j].value;
        if (std::popcount(diff) != 1) continue;
        merged[i] = merged[j] = true;
        std::uint32_t new_mask = current[i].mask & ~diff;
        next.insert(Cube{new_mask, current[i].value & new_mask});
      }
    }
    for (std::size_t i = 0; i < current.size(); ++i)
      if (!merged[i]) primes.insert(current[i]);
    current.assign(next.begin(), next.end());
  }
  return {primes.begin(), primes.end()};
}

namespace {

// Fixed-size bitset over the table's 1-row indices.
struct RowSet {
  std::vector<std::uint64_t> words;

  explicit RowSet(std::size_t bits = 0) : words((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words[i / 64] >> (i % 64)) & 1u; }
  void or_with(const RowSet& o) {
    for (std::size_t w = 0; w < words.size(); ++w) words[w] |= o.words[w];
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  std::size_t count_missing(const RowSet& covered) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words.size(); ++w)
      c += static_cast<std::size_t>(std::popcount(words[w] & ~covered.words[w]));
    return c;
  }
  bool contains(const RowSet& o) const {
    for (std::size_t w = 0; w < words.size(); ++w)
      if (o.words[w] & ~words[w]) return false;
    return true;
  }
};

std::size_t total_literals(const std::vector<Cube>& cubes) {
  std::size_t total = 0;
  for (const auto& c : cubes) total += c.literal_count();
  return total;
}

// (size, literals, sorted cube list) comparison for deterministic selection.
bool cover_better(const std::vector<Cube>& a, const std::vector<Cube>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  std::size_t la = total_literals(a), lb = total_literals(b);
  if (la != lb) return la < lb;
  return a < b;  // both sorted canonically
}

struct CoverSearch {
  const std::vector<Cube>& primes;
  const std::vector<RowSet>& prime_rows;  // 1-rows covered per prime
  std::size_t one_count;

  std::vector<Cube> best;
  bool have_best = false;

  // Branch and bound; equal-size branches are still explored so the
  // literal/lexicographic tie-break sees every minimum-size cover.
  void search(std::vector<std::size_t>& chosen, const RowSet& covered) {
    if (covered.count() == one_count) {
      std::vector<Cube> candidate;
      candidate.reserve(chosen.size());
      for (auto i : chosen) candidate.push_back(primes[i]);
      std::sort(candidate.begin(), candidate.end());
      if (!have_best || cover_better(candidate, best)) {
        best = std::move(candidate);
        have_best = true;
      }
      return;
    }
    // Lower bound: remaining rows over the widest remaining prime.
    std::size_t remaining = one_count - covered.count();
    std::size_t widest = 0;
    for (std::size_t p = 0; p < primes.size(); ++p)
      widest = std::max(widest, prime_rows[p].count_missing(covered));
    if (widest == 0) return;  // uncoverable from here
    std::size_t lower = (remaining + widest - 1) / widest;
    if (have_best && chosen.size() + lower > best.size()) return;

    // Branch on the uncovered row with the fewest candidate primes.
    std::size_t pick_row = 0, pick_count = std::numeric_limits<std::size_t>::max();
    for (std::size_t row = 0; row < one_count; ++row) {
      if (covered.test(row)) continue;
      std::size_t c = 0;
      for (std::size_t p = 0; p < primes.size(); ++p)
        if (prime_rows[p].test(row)) ++c;
      if (c < pick_count) {
        pick_count = c;
        pick_row = row;
      }
    }
    for (std::size_t p = 0; p < primes.size(); ++p) {
      if (!prime_rows[p].test(pick_row)) continue;
      RowSet next = covered;
      next.or_with(prime_rows[p]);
      chosen.push_back(p);
      search(chosen, next);
      chosen.pop_back();
    }
  }
};

}  // namespace

Cover select_cover(const std::vector<Cube>& primes, const TruthTable& t, Strategy strategy) {
  t.validate();
  std::vector<std::uint32_t> ones;
  for (std::uint32_t row = 0; row < t.row_count(); ++row)
    if (t.outputs[row] == Trit::one) ones.push_back(row);

  Cover result;
  result.form = CoverForm::sop;
  result.order = t.order;
  if (ones.empty()) return result;

  std::vector<Cube> sorted_primes = primes;
  std::sort(sorted_primes.begin(), sorted_primes.end());
  sorted_primes.erase(std::unique(sorted_primes.begin(), sorted_primes.end()),
                      sorted_primes.end());

  std::vector<RowSet> prime_rows(sorted_primes.size(), RowSet(ones.size()));
  RowSet reachable(ones.size());
  for (std::size_t p = 0; p < sorted_primes.size(); ++p) {
    for (std::size_t i = 0; i < ones.size(); ++i)
      if (sorted_primes[p].covers(ones[i])) prime_rows[p].set(i);
    reachable.or_with(prime_rows[p]);
  }
  for (std::size_t i = 0; i < ones.size(); ++i)
    if (!reachable.test(i))
      throw Error("primes do not cover minterm " + std::to_string(ones[i]));

  // Essential primes: sole cover of some 1-row; part of every cover.
  std::vector<bool> essential(sorted_primes.size(), false);
  for (std::size_t i = 0; i < ones.size(); ++i) {
    std::size_t count = 0, last = 0;
    for (std::size_t p = 0; p < sorted_primes.size(); ++p) {
      if (prime_rows[p].test(i)) {
        ++count;
        last = p;
      }
    }
    if (count == 1) essential[last] = true;
  }

  std::vector<std::size_t> chosen;
  RowSet covered(ones.size());
  for (std::size_t p = 0; p < sorted_primes.size(); ++p) {
    if (essential[p]) {
      chosen.push_back(p);
      covered.or_with(prime_rows[p]);
    }
  }

  std::vector<Cube> picked;
  if (covered.count() == ones.size()) {
    for (auto p : chosen) picked.push_back(sorted_primes[p]);
  } else if (strategy == Strategy::exact) {
    CoverSearch bb{sorted_primes, prime_rows, ones.size(), {}, false};
    bb.search(chosen, covered);
    if (!bb.have_best) throw std::logic_error("exact cover search found no cover");
    picked = bb.best;
  } else {
    // Greedy: most new rows, then fewest literals, then canonical order.
    while (covered.count() != ones.size()) {
      std::size_t best_p = sorted_primes.size();
      std::size_t best_gain = 0;
      for (std::size_t p = 0; p < sorted_primes.size(); ++p) {
        std::size_t gain = prime_rows[p].count_missing(covered);
        if (gain == 0) continue;
        if (best_p == sorted_primes.size() || gain > best_gain ||
            (gain == best_gain &&
             sorted_primes[p].literal_count() < sorted_primes[best_p].literal_count())) {
          best_p = p;
          best_gain = gain;
        }
      }
      chosen.push_back(best_p);
      covered.or_with(prime_rows[best_p]);
    }
    // Drop redundant picks until stable.
    bool removed = true;
    while (removed) {
      removed = false;
      std::sort(chosen.begin(), chosen.end());
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        RowSet rest(ones.size());
        for (std::size_t j = 0; j < chosen.size(); ++j)
          if (j != i) rest.or_with(prime_rows[chosen[j]]);
        if (rest.count() == ones.size()) {
          chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(i));
          removed = true;
          break;
        }
      }
    }
    for (auto p : chosen) picked.push_back(sorted_primes[p]);
  }

  std::sort(picked.begin(), picked.end(), [&](const Cube& a, const Cube& b) {
    return display_less(a, b, t.var_count());
  });
  result.cubes = std::move(picked);
  return result;
}

namespace {

TruthTable complement(const TruthTable& t) {
  TruthTable c = t;
  for (auto& v : c.outputs) {
    if (v == Trit::zero)
      v = Trit::one;
    else if (v == Trit::one)
      v = Trit::zero;
  }
  return c;
}

}  // namespace

Cover minimize_cover(const TruthTable& t, CoverForm form, const MinimizeOptions& opts) {
  Strategy strategy = exact_applies(t.var_count(), opts) ? Strategy::exact : Strategy::greedy;
  if (form == CoverForm::sop) {
    return select_cover(prime_implicants(t), t, strategy);
  }
  TruthTable comp = complement(t);
  Cover sop = select_cover(prime_implicants(comp), comp, strategy);
  Cover pos;
  pos.form = CoverForm::pos;
  pos.order = t.order;
  for (const auto& c : sop.cubes)
    pos.cubes.push_back(Cube{c.mask, ~c.value & c.mask});  // De Morgan: flip polarities
  return pos;
}

Expr minimize_sop(const TruthTable& t, const MinimizeOptions& opts) {
  return minimize_cover(t, CoverForm::sop, opts).to_expr();
}

Expr minimize_pos(const TruthTable& t, const MinimizeOptions& opts) {
  return minimize_cover(t, CoverForm::pos, opts).to_expr();
}

}  // namespace lsyn
