#include <doctest.h>

#include <bit>
#include <random>

#include "lsyn/kmap.hpp"
#include "lsyn/truth_table.hpp"
#include "oracles.hpp"

using namespace lsyn;

TEST_CASE("from_expr builds the majority table") {
  Expr maj = parse_expr("A'BC + AB'C + ABC' + ABC");
  TruthTable t = from_expr(maj, {"A", "B", "C"});
  std::vector<Trit> want = {Trit::zero, Trit::zero, Trit::zero, Trit::one,
                            Trit::zero, Trit::one,  Trit::one,  Trit::one};
  CHECK(t.outputs == want);
}

TEST_CASE("from_expr row encoding: first variable is the MSB") {
  TruthTable t = from_expr(parse_expr("ABC + A'BC + AB'C'"), {"A", "B", "C"});
  std::vector<std::uint32_t> ones;
  for (std::uint32_t row = 0; row < t.row_count(); ++row)
    if (t.outputs[row] == Trit::one) ones.push_back(row);
  CHECK(ones == std::vector<std::uint32_t>{3, 4, 7});  // 011, 100, 111
}

TEST_CASE("from_expr of a constant and order checking") {
  TruthTable t = from_expr(Expr::constant(false), {"A"});
  CHECK(t.outputs == std::vector<Trit>{Trit::zero, Trit::zero});
  CHECK_THROWS_AS(from_expr(parse_expr("AB"), {"A"}), Error);
}

TEST_CASE("canonical SOP of the majority table") {
  TruthTable t = from_expr(parse_expr("AB + AC + BC"), {"A", "B", "C"});
  CHECK(render(canonical_sop(t)) == "A'BC + AB'C + ABC' + ABC");
}

TEST_CASE("canonical SOP degenerate forms") {
  TruthTable zeros = from_expr(Expr::constant(false), {"A", "B", "C"});
  CHECK(render(canonical_sop(zeros)) == "0");
  TruthTable ones = from_expr(Expr::constant(true), {"A"});
  CHECK(render(canonical_sop(ones)) == "A' + A");
}

TEST_CASE("canonical POS forms") {
  // single 0-row 010: variable appears uncomplemented iff its bit is 0
  TruthTable t = from_expr(parse_expr("(A + B' + C)"), {"A", "B", "C"});
  CHECK(render(canonical_pos(t)) == "A + B' + C");

  TruthTable all_ones = from_expr(Expr::constant(true), {"A", "B"});
  CHECK(render(canonical_pos(all_ones)) == "1");

  TruthTable maj = from_expr(parse_expr("AB + AC + BC"), {"A", "B", "C"});
  Expr pos = canonical_pos(maj);
  REQUIRE(pos.kind() == ExprKind::op_and);
  CHECK(pos.operands().size() == 4);  // maxterms of rows 0,1,2,4
  CHECK(render(pos) == "(A + B + C)(A + B + C')(A + B' + C)(A' + B + C)");
}

TEST_CASE("canonical forms reject don't-cares") {
  TruthTable t = from_expr(parse_expr("A"), {"A"});
  t.outputs[0] = Trit::dc;
  CHECK_THROWS_AS(canonical_sop(t), Error);
  CHECK_THROWS_AS(canonical_pos(t), Error);
}

TEST_CASE("canonical forms are equivalent to the table") {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    auto order = oracle::letters(3);
    TruthTable t = oracle::random_table(rng, order);
    Expr sop = canonical_sop(t);
    Expr pos = canonical_pos(t);
    for (std::uint32_t row = 0; row < t.row_count(); ++row) {
      auto index = detail::make_var_index(order);
      bool want = t.outputs[row] == Trit::one;
      CHECK(detail::evaluate_row(sop, index, 3, row) == want);
      CHECK(detail::evaluate_row(pos, index, 3, row) == want);
    }
    // table -> expr -> table round trip
    CHECK(from_expr(sop, order).outputs == t.outputs);
  }
}

TEST_CASE("equivalent and find_counterexample") {
  Expr maj_min = parse_expr("AB + AC + BC");
  Expr maj_canon = parse_expr("A'BC + AB'C + ABC' + ABC");
  CHECK(equivalent(maj_min, maj_canon));
  CHECK(!equivalent(parse_expr("A"), parse_expr("A'")));
  CHECK(equivalent(parse_expr("A ^ B"), parse_expr("AB' + A'B")));

  auto witness = find_counterexample(parse_expr("A"), parse_expr("B"));
  REQUIRE(witness.has_value());
  CHECK(evaluate(parse_expr("A"), *witness) != evaluate(parse_expr("B"), *witness));
}

TEST_CASE("equivalence bound is enforced") {
  std::vector<Expr> vars;
  for (int i = 0; i < 25; ++i) vars.push_back(Expr::var("V" + std::to_string(i)));
  Expr wide = Expr::or_of(std::move(vars));
  CHECK_THROWS_AS(equivalent(wide, Expr::constant(false)), Error);
  // the bound is configurable in both directions
  Expr five = parse_expr("A + B + C + D + E");
  CHECK_THROWS_AS(equivalent(five, five, 4), Error);
  CHECK(equivalent(five, five, 5));
}

TEST_CASE("truth table text round-trips") {
  TruthTable t = from_expr(parse_expr("AB + C'"), {"A", "B", "C"});
  t.outputs[5] = Trit::dc;
  std::string text = write_table_text(t);
  TruthTable back = parse_table_text(text);
  CHECK(back.order == t.order);
  CHECK(back.outputs == t.outputs);
}

TEST_CASE("truth table text errors") {
  CHECK_THROWS_AS(parse_table_text(""), Error);
  CHECK_THROWS_AS(parse_table_text("A B\n00 1\n01 0\n10 1\n"), Error);     // missing row
  CHECK_THROWS_AS(parse_table_text("A\n0 1\n1 0\n0 1\n"), Error);          // duplicate
  CHECK_THROWS_AS(parse_table_text("A\n0 2\n1 0\n"), Error);               // bad value
  CHECK_THROWS_AS(parse_table_text("A A\n"), Error);                       // dup name
}

TEST_CASE("K-map layout for 2, 3 and 4 variables") {
  // 2-var AND: single 1 at A=1, B=1
  KmapGrid g2 = kmap_render(from_expr(parse_expr("AB"), {"A", "B"}));
  CHECK(g2.row_labels == std::vector<std::string>{"0", "1"});
  CHECK(g2.col_labels == std::vector<std::string>{"0", "1"});
  CHECK(g2.cells[1][1] == Trit::one);
  CHECK(g2.cells[0][0] == Trit::zero);
  CHECK(g2.cells[0][1] == Trit::zero);
  CHECK(g2.cells[1][0] == Trit::zero);

  // 3-var majority: rows A, columns BC in Gray order
  KmapGrid g3 = kmap_render(from_expr(parse_expr("AB + AC + BC"), {"A", "B", "C"}));
  CHECK(g3.col_labels == std::vector<std::string>{"00", "01", "11", "10"});
  std::vector<std::vector<Trit>> want = {
      {Trit::zero, Trit::zero, Trit::one, Trit::zero},
      {Trit::zero, Trit::one, Trit::one, Trit::one},
  };
  CHECK(g3.cells == want);

  // 4-var: both axes in Gray order 00 01 11 10
  KmapGrid g4 = kmap_render(from_expr(parse_expr("AB + CD"), {"A", "B", "C", "D"}));
  CHECK(g4.row_labels == std::vector<std::string>{"00", "01", "11", "10"});
  CHECK(g4.col_labels == std::vector<std::string>{"00", "01", "11", "10"});
  CHECK(g4.row_vars == VarOrder{"A", "B"});
  CHECK(g4.col_vars == VarOrder{"C", "D"});

  CHECK_THROWS_AS(kmap_render(from_expr(parse_expr("A"), {"A"})), Error);
  CHECK_THROWS_AS(
      kmap_render(from_expr(parse_expr("ABCDE"), {"A", "B", "C", "D", "E"})), Error);
}

TEST_CASE("K-map adjacency: neighbours differ in exactly one variable") {
  std::mt19937 rng(5);
  for (std::size_t n = 2; n <= 4; ++n) {
    TruthTable t = oracle::random_table(rng, oracle::letters(n));
    KmapGrid g = kmap_render(t);
    std::size_t rows = g.rows.size(), cols = g.rows[0].size();
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        std::uint32_t here = g.rows[r][c];
        std::uint32_t right = g.rows[r][(c + 1) % cols];
        std::uint32_t down = g.rows[(r + 1) % rows][c];
        if (cols > 1) CHECK(std::popcount(here ^ right) == 1);
        if (rows > 1) CHECK(std::popcount(here ^ down) == 1);
      }
    }
  }
}

TEST_CASE("K-map text rendering") {
  KmapGrid g = kmap_render(from_expr(parse_expr("AB + AC + BC"), {"A", "B", "C"}));
  CHECK(kmap_text(g) ==
        "A\\BC  00  01  11  10\n"
        "0      0   0   1   0\n"
        "1      0   1   1   1\n");
}
