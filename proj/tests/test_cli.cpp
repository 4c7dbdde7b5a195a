#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lsyn/netlist.hpp"
#include "lsyn/truth_table.hpp"

// End-to-end runs of the installed binary; LSYN_CLI_PATH comes from CMake.

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int status = -1;
  std::string out;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "lsyn_cli_tests";
  fs::create_directories(dir);
  return dir;
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  fs::path out = scratch_dir() / ("out" + std::to_string(counter++) + ".txt");
  std::string cmd = std::string("\"") + LSYN_CLI_PATH + "\" " + args + " > " +
                    out.string() + " 2>/dev/null";
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out);
  return r;
}

fs::path write_temp(const std::string& name, const std::string& content) {
  fs::path p = scratch_dir() / name;
  std::ofstream out(p, std::ios::binary);
  out << content;
  return p;
}

}  // namespace

TEST_CASE("cli: table prints the AND and OR tables") {
  RunResult r = run_cli("table \"AB\"");
  CHECK(r.status == 0);
  CHECK(r.out == "A B\n00 0\n01 0\n10 0\n11 1\n");
  r = run_cli("table \"A + B\"");
  CHECK(r.out == "A B\n00 0\n01 1\n10 1\n11 1\n");
  r = run_cli("table \"1\"");
  CHECK(r.out == "1\n");
}

TEST_CASE("cli: minimize the worked example and the majority function") {
  RunResult r = run_cli("minimize \"A'B'C' + A'B'C + ABC' + AB'C'\"");
  CHECK(r.status == 0);
  CHECK(r.out == "A'B' + AC'\n# 2 terms, 4 literals\n");

  r = run_cli("minimize \"A'BC + AB'C + ABC' + ABC\"");
  CHECK(r.out == "AB + AC + BC\n# 3 terms, 6 literals\n");
}

TEST_CASE("cli: minimize --form pos emits an equivalent POS expression") {
  RunResult r = run_cli("minimize --form pos \"ABC + A'BC + AB'C'\"");
  REQUIRE(r.status == 0);
  std::string first = r.out.substr(0, r.out.find('\n'));
  using namespace lsyn;
  CHECK(equivalent(parse_expr(first), parse_expr("ABC + A'BC + AB'C'")));
}

TEST_CASE("cli: minimize reads a PLA file") {
  fs::path pla = write_temp("majority.pla",
                            ".i 3\n.o 1\n.p 4\n011 1\n101 1\n110 1\n111 1\n.e\n");
  RunResult r = run_cli("minimize " + pla.string());
  CHECK(r.status == 0);
  CHECK(r.out == "AB + AC + BC\n# 3 terms, 6 literals\n");
}

TEST_CASE("cli: identical runs give identical bytes") {
  RunResult a = run_cli("minimize \"AB + AB'C + A'B'C' + BC\"");
  RunResult b = run_cli("minimize \"AB + AB'C + A'B'C' + BC\"");
  CHECK(a.out == b.out);
}

TEST_CASE("cli: check reports equivalence and counterexamples") {
  RunResult r = run_cli("check \"A'BC + AB'C + ABC' + ABC\" \"AB + AC + BC\"");
  CHECK(r.status == 0);
  CHECK(r.out == "equivalent\n");
  r = run_cli("check A B");
  CHECK(r.status == 0);
  CHECK(r.out.find("not equivalent:") == 0);
}

TEST_CASE("cli: synth to an AOI netlist") {
  RunResult r = run_cli("synth --target aoi \"AB + AC + BC\"");
  REQUIRE(r.status == 0);
  lsyn::Netlist nl = lsyn::parse_netlist_text(r.out);
  std::size_t ands = 0, ors = 0;
  for (const auto& g : nl.gates) {
    if (g.kind == lsyn::GateKind::g_and) ++ands;
    if (g.kind == lsyn::GateKind::g_or) ++ors;
  }
  CHECK(ands == 3);
  CHECK(ors == 1);
}

TEST_CASE("cli: synth to a PLA file keeps the three majority terms") {
  fs::path pla = write_temp("maj_min.pla", ".i 3\n.o 1\n.p 3\n11- 1\n1-1 1\n-11 1\n.e\n");
  RunResult r = run_cli("synth --target pla " + pla.string());
  REQUIRE(r.status == 0);
  CHECK(r.out == ".i 3\n.o 1\n.p 3\n11- 1\n1-1 1\n-11 1\n.e\n");
}

TEST_CASE("cli: synth to a MUX tree is equivalence-checked here") {
  RunResult r = run_cli("synth --target mux \"AB\"");
  REQUIRE(r.status == 0);
  lsyn::Netlist nl = lsyn::parse_netlist_text(r.out);
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      CHECK(lsyn::eval_comb(nl, {{"A", a == 1}, {"B", b == 1}}).at(nl.outputs[0]) ==
            (a == 1 && b == 1));
}

TEST_CASE("cli: fsm prints equations and sim walks the counter") {
  std::string table_text =
      "states 3\n000 -> 001\n001 -> 010\n010 -> 011\n011 -> 100\n"
      "100 -> 101\n101 -> 110\n110 -> 111\n111 -> 000\n";
  fs::path st = write_temp("counter.st", table_text);
  fs::path nl_path = scratch_dir() / "counter.nl";
  RunResult r = run_cli("fsm " + st.string() + " --ff d --out " + nl_path.string());
  REQUIRE(r.status == 0);
  CHECK(r.out.find("Da = Qa'.Qb.Qc + Qa.Qb' + Qa.Qc'\n") != std::string::npos);
  CHECK(r.out.find("Db = Qb'.Qc + Qb.Qc'\n") != std::string::npos);
  CHECK(r.out.find("Dc = Qc'\n") != std::string::npos);

  RunResult sim = run_cli("sim " + nl_path.string() + " --cycles 8 --reset 000");
  REQUIRE(sim.status == 0);
  CHECK(sim.out.find("cycle,Qa,Qb,Qc\n") == 0);
  CHECK(sim.out.find("\n8,0,0,0\n") != std::string::npos);

  RunResult empty = run_cli("sim " + nl_path.string() + " --cycles 0");
  CHECK(empty.out == "cycle,Qa,Qb,Qc\n");
}

TEST_CASE("cli: fsm without --out emits a netlist with equation comments") {
  fs::path st = write_temp("toggle.st", "states 1\n0 -> 1\n1 -> 0\n");
  RunResult r = run_cli("fsm " + st.string() + " --ff jk");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("# Ja = 1\n") != std::string::npos);
  CHECK(r.out.find("# Ka = 1\n") != std::string::npos);
  CHECK_NOTHROW(lsyn::parse_netlist_text(r.out));
}

TEST_CASE("cli: error exits are 1 for user input problems") {
  CHECK(run_cli("table \"A +\"").status == 1);
  CHECK(run_cli("minimize missing_file_is_an_expression@").status == 1);
  CHECK(run_cli("sim /nonexistent.nl --cycles 1").status == 1);
  CHECK(run_cli("synth --target warp \"A\"").status == 1);
  CHECK(run_cli("bogus-subcommand").status == 1);

  // sim without stimuli for a netlist with primary inputs
  fs::path nl = write_temp("comb.nl",
                           "input A\ninput B\noutput F\ngate g AND A B -> F\n");
  CHECK(run_cli("sim " + nl.string() + " --cycles 2").status == 1);
}

TEST_CASE("cli: --order pins variable positions") {
  RunResult r = run_cli("table --order B,A \"AB\"");
  CHECK(r.status == 0);
  CHECK(r.out == "B A\n00 0\n01 0\n10 0\n11 1\n");
  CHECK(run_cli("table --order A \"AB\"").status == 1);  // B not in order
}

TEST_CASE("cli: check enforces the variable bound") {
  std::string wide = "A";
  for (char c = 'B'; c <= 'Y'; ++c) wide += std::string(" + ") + c;  // 25 variables
  RunResult r = run_cli("check \"" + wide + "\" \"0\"");
  CHECK(r.status == 1);
  CHECK(run_cli("check --bound 4 \"A + B + C + D + E\" \"0\"").status == 1);
  CHECK(run_cli("check --bound 5 \"A + B + C + D + E\" \"0\"").status == 0);
}

TEST_CASE("cli: synth handles constants and writes dot diagrams") {
  RunResult r = run_cli("synth --target aoi \"1\"");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("CONST1") != std::string::npos);

  fs::path dot = scratch_dir() / "maj.dot";
  RunResult d = run_cli("synth --target aoi \"AB + AC + BC\" --dot " + dot.string());
  REQUIRE(d.status == 0);
  CHECK(slurp(dot).find("digraph") == 0);
}

TEST_CASE("cli: equations files drive multi-output mapping") {
  fs::path eqs = write_temp("pair.eqn", "s = AB' + A'B\nc = AB\n");
  RunResult r = run_cli("synth --target pal --terms 2 " + eqs.string());
  REQUIRE(r.status == 0);
  CHECK(r.out.find(".pal 2\n") != std::string::npos);

  RunResult pla = run_cli("synth --target pla " + eqs.string());
  REQUIRE(pla.status == 0);
  CHECK(pla.out.find(".o 2\n") != std::string::npos);

  RunResult err = run_cli("synth --target pal --terms 1 " + eqs.string());
  CHECK(err.status == 1);
}
