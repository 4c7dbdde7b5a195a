#include <doctest.h>

#include <bit>
#include <random>

#include "lsyn/minimize.hpp"
#include "oracles.hpp"

using namespace lsyn;

namespace {

std::vector<std::string> cube_strings(const std::vector<Cube>& cubes, std::size_t n) {
  std::vector<std::string> out;
  for (const auto& c : cubes) out.push_back(c.to_chars(n));
  std::sort(out.begin(), out.end());
  return out;
}

TruthTable table_of(const char* expr, const VarOrder& order) {
  return from_expr(parse_expr(expr), order);
}

bool matches_on_care_rows(const Expr& e, const TruthTable& t) {
  auto index = detail::make_var_index(t.order);
  for (std::uint32_t row = 0; row < t.row_count(); ++row) {
    if (t.outputs[row] == Trit::dc) continue;
    if (detail::evaluate_row(e, index, t.var_count(), row) !=
        (t.outputs[row] == Trit::one))
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("prime implicants of the worked 3-variable function") {
  // f = A'B'C' + A'B'C + ABC' + AB'C', 1-rows {000,001,110,100}
  TruthTable t = table_of("A'B'C' + A'B'C + ABC' + AB'C'", {"A", "B", "C"});
  auto primes = prime_implicants(t);
  CHECK(cube_strings(primes, 3) == std::vector<std::string>{"-00", "00-", "1-0"});
  CHECK(primes == oracle::enumerate_primes(t));
}

TEST_CASE("prime implicants of the majority function") {
  TruthTable t = table_of("A'BC + AB'C + ABC' + ABC", {"A", "B", "C"});
  auto primes = prime_implicants(t);
  CHECK(cube_strings(primes, 3) == std::vector<std::string>{"-11", "1-1", "11-"});
  CHECK(primes == oracle::enumerate_primes(t));
}

TEST_CASE("a lone minterm is its own prime") {
  TruthTable t = table_of("AB", {"A", "B"});
  auto primes = prime_implicants(t);
  REQUIRE(primes.size() == 1);
  CHECK(primes[0].to_chars(2) == "11");
}

TEST_CASE("prime implicants of the empty function") {
  TruthTable t = from_expr(Expr::constant(false), {"A", "B"});
  CHECK(prime_implicants(t).empty());
}

TEST_CASE("select_cover picks the essential-driven minimum for f") {
  TruthTable t = table_of("A'B'C' + A'B'C + ABC' + AB'C'", {"A", "B", "C"});
  Cover c = select_cover(prime_implicants(t), t, Strategy::exact);
  // A'B' is the only cover of 001 and AC' the only cover of 110; together
  // they also pick up 000 and 100.
  CHECK(cube_strings(c.cubes, 3) == std::vector<std::string>{"00-", "1-0"});
  CHECK(c.to_string() == "A'B' + AC'");
}

TEST_CASE("select_cover majority: all three primes are essential") {
  TruthTable t = table_of("A'BC + AB'C + ABC' + ABC", {"A", "B", "C"});
  Cover c = select_cover(prime_implicants(t), t, Strategy::exact);
  CHECK(cube_strings(c.cubes, 3) == std::vector<std::string>{"-11", "1-1", "11-"});
  CHECK(c.to_string() == "AB + AC + BC");
}

TEST_CASE("select_cover of the 4-variable g function") {
  // g's 1-rows are {0,1,2,3,7,8,10,11,15}; the exact minimum is three
  // primes (verified against the subset-search oracle below).
  TruthTable t = table_of(
      "AB'C'D' + A'B'C'D' + A'B'C'D + A'B'CD + AB'CD + A'B'CD' + A'BCD + ABCD + AB'CD'",
      {"A", "B", "C", "D"});
  std::vector<std::uint32_t> ones;
  for (std::uint32_t row = 0; row < 16; ++row)
    if (t.outputs[row] == Trit::one) ones.push_back(row);
  CHECK(ones == std::vector<std::uint32_t>{0, 1, 2, 3, 7, 8, 10, 11, 15});

  auto primes = prime_implicants(t);
  CHECK(primes == oracle::enumerate_primes(t));
  Cover c = select_cover(primes, t, Strategy::exact);
  CHECK(c.cubes.size() == oracle::min_cover_size(primes, t));
  CHECK(c.cubes.size() == 3);
  CHECK(cube_strings(c.cubes, 4) == std::vector<std::string>{"--11", "-0-0", "00--"});
  CHECK(c.to_string() == "A'B' + B'D' + CD");
  CHECK(matches_on_care_rows(c.to_expr(), t));
}

TEST_CASE("select_cover rejects primes that cannot cover a 1-row") {
  TruthTable t = table_of("A + B", {"A", "B"});
  std::vector<Cube> only_ab = {Cube::from_chars("11")};
  CHECK_THROWS_AS(select_cover(only_ab, t, Strategy::exact), Error);
}

TEST_CASE("minimize_sop on the paper examples") {
  CHECK(render(minimize_sop(table_of("A'B'C' + A'B'C + ABC' + AB'C'", {"A", "B", "C"}))) ==
        "A'B' + AC'");
  CHECK(render(minimize_sop(table_of("A'BC + AB'C + ABC' + ABC", {"A", "B", "C"}))) ==
        "AB + AC + BC");
  CHECK(render(minimize_sop(from_expr(Expr::constant(true), {"A", "B", "C"}))) == "1");
  CHECK(render(minimize_sop(from_expr(Expr::constant(false), {"A", "B"}))) == "0");
}

TEST_CASE("derive_term keeps only the variables that do not change") {
  VarOrder order = {"A", "B", "C"};
  CHECK(render(derive_term(Cube::from_chars("00-"), order)) == "A'B'");
  CHECK(render(derive_term(Cube::from_chars("1-0"), order)) == "AC'");
  CHECK(render(derive_term(Cube::from_chars("---"), order)) == "1");
  CHECK(render(derive_sum_term(Cube::from_chars("10-"), order)) == "A + B'");
  CHECK(render(derive_sum_term(Cube::from_chars("---"), order)) == "0");
}

TEST_CASE("don't-cares widen the cover") {
  TruthTable t;
  t.order = {"A", "B"};
  t.outputs = {Trit::one, Trit::dc, Trit::dc, Trit::dc};
  CHECK(render(minimize_sop(t)) == "1");
  Cover c = minimize_cover(t, CoverForm::sop);
  REQUIRE(c.cubes.size() == 1);
  CHECK(c.cubes[0].mask == 0);  // the universal cube
}

TEST_CASE("minimize_pos duals") {
  TruthTable one_var;
  one_var.order = {"A"};
  one_var.outputs = {Trit::one, Trit::zero};  // 0-row at A=1
  Cover pos = minimize_cover(one_var, CoverForm::pos);
  CHECK(pos.to_string() == "(A')");
  CHECK(render(minimize_pos(one_var)) == "A'");

  TruthTable maj = table_of("AB + AC + BC", {"A", "B", "C"});
  Cover mpos = minimize_cover(maj, CoverForm::pos);
  CHECK(mpos.cubes.size() == 3);
  CHECK(mpos.to_string() == "(A + B).(A + C).(B + C)");
  CHECK(equivalent(mpos.to_expr(), parse_expr("AB + AC + BC")));

  TruthTable zeros = from_expr(Expr::constant(false), {"A", "B"});
  CHECK(render(minimize_pos(zeros)) == "0");
  CHECK(minimize_cover(zeros, CoverForm::pos).to_string() == "0");
  TruthTable ones = from_expr(Expr::constant(true), {"A", "B"});
  CHECK(render(minimize_pos(ones)) == "1");
}

TEST_CASE("greedy can be suboptimal on a cyclic cover, exact never is") {
  // 1-rows {0,1,2,5,6,7}: six primes, no essentials, minimum cover 3.
  TruthTable t;
  t.order = {"A", "B", "C"};
  t.outputs = {Trit::one, Trit::one, Trit::one, Trit::zero,
               Trit::zero, Trit::one, Trit::one, Trit::one};
  auto primes = prime_implicants(t);
  CHECK(primes.size() == 6);
  Cover exact = select_cover(primes, t, Strategy::exact);
  CHECK(exact.cubes.size() == 3);
  CHECK(exact.cubes.size() == oracle::min_cover_size(primes, t));
  Cover greedy = select_cover(primes, t, Strategy::greedy);
  CHECK(greedy.cubes.size() == 4);
  CHECK(matches_on_care_rows(greedy.to_expr(), t));

  // the variable limit downgrades exact to greedy
  MinimizeOptions opts;
  opts.strategy = Strategy::exact;
  opts.exact_var_limit = 2;
  CHECK(minimize_cover(t, CoverForm::sop, opts).cubes.size() == 4);
}

TEST_CASE("exact matches the brute-force minimum on every 3-variable function") {
  VarOrder order = oracle::letters(3);
  for (std::uint32_t bits = 0; bits < 256; ++bits) {
    TruthTable t;
    t.order = order;
    for (std::uint32_t row = 0; row < 8; ++row)
      t.outputs.push_back((bits >> row) & 1u ? Trit::one : Trit::zero);
    auto primes = prime_implicants(t);
    CHECK(primes == oracle::enumerate_primes(t));
    Cover c = select_cover(primes, t, Strategy::exact);
    CHECK(c.cubes.size() == oracle::min_cover_size(primes, t));
    CHECK(matches_on_care_rows(c.to_expr(), t));
  }
}

TEST_CASE("soundness, primality, irredundancy and group sizes on random tables") {
  std::mt19937 rng(1234);
  for (int i = 0; i < 120; ++i) {
    std::size_t n = 2 + static_cast<std::size_t>(i % 3);  // 2..4
    TruthTable t = oracle::random_table(rng, oracle::letters(n), 12);
    auto primes = prime_implicants(t);
    CHECK(primes == oracle::enumerate_primes(t));
    for (const auto& p : primes) {
      CHECK(oracle::is_prime(p, t));
      // structural: a cube always covers a power-of-two number of rows
      std::size_t covered = 0;
      for (std::uint32_t row = 0; row < t.row_count(); ++row)
        if (p.covers(row)) ++covered;
      CHECK(std::has_single_bit(covered));
    }
    for (Strategy s : {Strategy::exact, Strategy::greedy}) {
      Cover c = select_cover(primes, t, s);
      CHECK(matches_on_care_rows(c.to_expr(), t));
      // irredundant: dropping any cube uncovers some 1-row
      for (std::size_t drop = 0; drop < c.cubes.size(); ++drop) {
        std::vector<Cube> rest;
        for (std::size_t j = 0; j < c.cubes.size(); ++j)
          if (j != drop) rest.push_back(c.cubes[j]);
        CHECK(!oracle::covers_all_ones(rest, t));
      }
    }
  }
}

TEST_CASE("soundness on wider random tables") {
  std::mt19937 rng(99);
  for (int i = 0; i < 40; ++i) {
    std::size_t n = 5 + static_cast<std::size_t>(i % 2);
    TruthTable t = oracle::random_table(rng, oracle::letters(n), 10);
    CHECK(matches_on_care_rows(minimize_sop(t), t));
    CHECK(matches_on_care_rows(minimize_pos(t), t));
  }
}
