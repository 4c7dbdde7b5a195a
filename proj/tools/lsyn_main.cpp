// lsyn - two-level logic synthesis toolkit command line.
//
// Verbs: parse, table, kmap, minimize, check, synth, fsm, sim.
// Exit codes: 0 success, 1 user/input error, 2 internal error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lsyn/kmap.hpp"
#include "lsyn/minimize.hpp"
#include "lsyn/seq.hpp"
#include "lsyn/techmap.hpp"

namespace {

using namespace lsyn;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error("cannot write '" + out_path + "'");
  out << text;
}

VarOrder split_order(const std::string& flag) {
  VarOrder order;
  std::string token;
  for (char c : flag + ",") {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!token.empty()) order.push_back(token);
      token.clear();
    } else {
      token.push_back(c);
    }
  }
  check_var_order(order);
  return order;
}

Expr parse_source_expr(const std::string& text, const VarOrder& order) {
  return order.empty() ? parse_expr(text) : parse_expr(text, order);
}

struct NamedExpr {
  std::string name;
  Expr expr;
};

struct LoadedSource {
  std::vector<NamedExpr> functions;
  VarOrder order;  // resolved variable order covering every function
};

VarOrder pla_input_names(std::size_t n) {
  VarOrder order;
  for (std::size_t k = 0; k < n; ++k) {
    if (n <= 26)
      order.push_back(std::string(1, static_cast<char>('A' + k)));
    else
      order.push_back("x" + std::to_string(k));
  }
  return order;
}

bool looks_like_pla(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string s = line.substr(0, line.find('#'));
    auto pos = s.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) continue;
    return s[pos] == '.';
  }
  return false;
}

std::vector<NamedExpr> parse_equations(const std::string& text, const VarOrder& order) {
  std::vector<NamedExpr> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = line.substr(0, line.find('#'));
    if (s.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    auto eq = s.find('=');
    if (eq == std::string::npos)
      throw Error("line " + std::to_string(lineno) + ": expected '<name> = <expression>'");
    std::istringstream name_in(s.substr(0, eq));
    std::string name, extra;
    if (!(name_in >> name) || (name_in >> extra))
      throw Error("line " + std::to_string(lineno) + ": expected one output name");
    try {
      out.push_back({name, parse_source_expr(s.substr(eq + 1), order)});
    } catch (const Error& e) {
      throw Error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (out.empty()) throw Error("no equations found");
  return out;
}

// A source argument is an expression, an equations file ('name = expr'
// lines) or a PLA file; files are detected by existence.
LoadedSource load_source(const std::string& source, const std::string& order_flag) {
  VarOrder explicit_order = order_flag.empty() ? VarOrder{} : split_order(order_flag);
  LoadedSource loaded;
  if (std::filesystem::exists(source)) {
    std::string text = read_file(source);
    if (looks_like_pla(text)) {
      PlaProgram p = parse_pla_text(text);
      VarOrder order = explicit_order.empty() ? pla_input_names(p.num_inputs)
                                              : explicit_order;
      if (order.size() != p.num_inputs)
        throw Error("order names " + std::to_string(order.size()) +
                    " variables, PLA has " + std::to_string(p.num_inputs) + " inputs");
      for (std::size_t j = 0; j < p.num_outputs; ++j) {
        std::string name = p.num_outputs == 1 ? "F" : "F" + std::to_string(j);
        loaded.functions.push_back({name, pla_output_cover(p, j, order).to_expr()});
      }
      loaded.order = order;
      return loaded;
    }
    loaded.functions = parse_equations(text, explicit_order);
  } else {
    loaded.functions.push_back({"F", parse_source_expr(source, explicit_order)});
  }
  if (explicit_order.empty()) {
    VarOrder order;
    for (const auto& f : loaded.functions)
      for (const auto& v : variables(f.expr))
        if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
    loaded.order = order;
  } else {
    for (const auto& f : loaded.functions)
      for (const auto& v : variables(f.expr))
        if (std::find(explicit_order.begin(), explicit_order.end(), v) ==
            explicit_order.end())
          throw Error("variable '" + v + "' is not in --order");
    loaded.order = explicit_order;
  }
  return loaded;
}

Expr single_function(const LoadedSource& loaded, const std::string& verb) {
  if (loaded.functions.size() != 1)
    throw Error(verb + " expects a single function, got " +
                std::to_string(loaded.functions.size()));
  return loaded.functions.front().expr;
}

std::string table_listing(const TruthTable& t) {
  if (t.var_count() == 0) return std::string(1, trit_char(t.outputs[0])) + "\n";
  return write_table_text(t);
}

CoverForm form_of(const std::string& flag) {
  if (flag == "sop") return CoverForm::sop;
  if (flag == "pos") return CoverForm::pos;
  throw Error("--form must be sop or pos");
}

MinimizeOptions options_of(const std::string& strategy_flag, std::size_t exact_limit) {
  MinimizeOptions opts;
  opts.exact_var_limit = exact_limit;
  if (strategy_flag == "exact")
    opts.strategy = Strategy::exact;
  else if (strategy_flag == "greedy")
    opts.strategy = Strategy::greedy;
  else
    throw Error("--strategy must be exact or greedy");
  return opts;
}

void warn_if_downgraded(const MinimizeOptions& opts, std::size_t n) {
  if (opts.strategy == Strategy::exact && !exact_applies(n, opts))
    std::cerr << "warning: " << n << " variables exceed the exact limit of "
              << opts.exact_var_limit << "; using the greedy strategy\n";
}

// ---------------------------------------------------------------------------
// Commands

struct CommonArgs {
  std::string order;
  std::string out;
};

int cmd_parse(const std::string& source, const CommonArgs& common) {
  VarOrder order = common.order.empty() ? VarOrder{} : split_order(common.order);
  Expr e = parse_source_expr(source, order);
  std::ostringstream out;
  out << render(e) << '\n';
  out << "variables:";
  for (const auto& v : variables(e)) out << ' ' << v;
  out << '\n';
  write_output(common.out, out.str());
  return 0;
}

int cmd_table(const std::string& source, const CommonArgs& common) {
  LoadedSource loaded = load_source(source, common.order);
  Expr e = single_function(loaded, "table");
  write_output(common.out, table_listing(from_expr(e, loaded.order)));
  return 0;
}

int cmd_kmap(const std::string& source, const CommonArgs& common) {
  LoadedSource loaded = load_source(source, common.order);
  Expr e = single_function(loaded, "kmap");
  write_output(common.out, kmap_text(kmap_render(from_expr(e, loaded.order))));
  return 0;
}

int cmd_minimize(const std::string& source, const CommonArgs& common,
                 const std::string& form_flag, const std::string& strategy_flag,
                 std::size_t exact_limit) {
  LoadedSource loaded = load_source(source, common.order);
  CoverForm form = form_of(form_flag);
  MinimizeOptions opts = options_of(strategy_flag, exact_limit);
  warn_if_downgraded(opts, loaded.order.size());
  std::ostringstream out;
  bool single = loaded.functions.size() == 1;
  for (const auto& f : loaded.functions) {
    Cover c = minimize_cover(from_expr(f.expr, loaded.order), form, opts);
    if (single)
      out << c.to_string() << '\n';
    else
      out << f.name << " = " << c.to_string() << '\n';
    out << "# " << (single ? "" : f.name + ": ") << c.cubes.size() << " terms, "
        << c.literal_count() << " literals\n";
  }
  write_output(common.out, out.str());
  return 0;
}

int cmd_check(const std::string& a, const std::string& b, const CommonArgs& common,
              std::size_t bound) {
  VarOrder order = common.order.empty() ? VarOrder{} : split_order(common.order);
  Expr ea = parse_source_expr(a, order);
  Expr eb = parse_source_expr(b, order);
  auto witness = find_counterexample(ea, eb, bound);
  if (!witness) {
    write_output(common.out, "equivalent\n");
    return 0;
  }
  std::ostringstream out;
  out << "not equivalent:";
  for (const auto& [name, value] : *witness) out << ' ' << name << '=' << (value ? 1 : 0);
  out << '\n';
  write_output(common.out, out.str());
  return 0;
}

int cmd_synth(const std::string& source, const CommonArgs& common,
              const std::string& target, const std::string& form_flag,
              std::size_t capacity, std::size_t pal_terms, const std::string& dot_path) {
  LoadedSource loaded = load_source(source, common.order);
  CoverForm form = form_of(form_flag);

  auto write_netlist = [&](const Netlist& nl) {
    write_output(common.out, write_netlist_text(nl));
    if (!dot_path.empty()) write_output(dot_path, to_dot(nl));
  };

  if (target == "aoi") {
    Netlist nl;
    nl.inputs = loaded.order;
    std::map<std::size_t, std::string> inverter_nets;
    auto literal = [&](std::size_t k, bool positive) {
      if (positive) return loaded.order[k];
      auto it = inverter_nets.find(k);
      if (it != inverter_nets.end()) return it->second;
      std::string id = "inv_" + loaded.order[k];
      nl.gates.push_back(Gate{id, GateKind::g_not, {loaded.order[k]}, id + "_o"});
      return inverter_nets.emplace(k, nl.gates.back().output).first->second;
    };
    for (const auto& f : loaded.functions) {
      Cover c = cover_from_expr(f.expr, loaded.order, form);
      nl.outputs.push_back(emit_cover_logic(nl, c, f.name, f.name, literal));
    }
    nl.validate();
    write_netlist(nl);
    return 0;
  }
  if (target == "mux") {
    Expr e = single_function(loaded, "synth --target mux");
    write_netlist(map_mux(from_expr(e, loaded.order), loaded.order,
                          loaded.functions.front().name));
    return 0;
  }
  if (target == "pla" || target == "pal") {
    std::vector<Cover> covers;
    std::vector<std::string> names;
    for (const auto& f : loaded.functions) {
      covers.push_back(cover_from_expr(f.expr, loaded.order, CoverForm::sop));
      names.push_back(f.name);
    }
    if (target == "pla") {
      write_output(common.out, write_pla_text(map_pla(covers, capacity)));
    } else {
      write_output(common.out, write_pal_text(map_pal(covers, pal_terms, names)));
    }
    return 0;
  }
  throw Error("--target must be aoi, pla, pal or mux");
}

int cmd_fsm(const std::string& path, const CommonArgs& common, const std::string& ff_flag,
            const std::string& dot_path, std::size_t exact_limit) {
  FlopKind kind;
  if (ff_flag == "d")
    kind = FlopKind::d;
  else if (ff_flag == "jk")
    kind = FlopKind::jk;
  else
    throw Error("--ff must be d or jk");

  StateTable st = parse_state_table_text(read_file(path));
  MinimizeOptions opts;
  opts.exact_var_limit = exact_limit;
  warn_if_downgraded(opts, st.width);

  std::ostringstream equations;
  for (const auto& eq : excitation_equations(st, kind)) {
    Cover c = minimize_cover(eq.table, CoverForm::sop, opts);
    equations << (common.out.empty() ? "# " : "") << eq.name << " = " << c.to_string()
              << '\n';
  }
  Netlist nl = synth_fsm(st, kind, opts);
  if (common.out.empty()) {
    // comment-prefixed equations keep stdout a valid netlist file
    std::cout << equations.str() << write_netlist_text(nl);
  } else {
    std::cout << equations.str();
    write_output(common.out, write_netlist_text(nl));
  }
  if (!dot_path.empty()) write_output(dot_path, to_dot(nl));
  return 0;
}

int cmd_sim(const std::string& path, const CommonArgs& common, std::size_t cycles,
            const std::string& reset_flag, const std::string& stimuli_path,
            const std::string& watch_flag) {
  Netlist nl = parse_netlist_text(read_file(path));

  std::optional<std::vector<Sig>> reset;
  if (reset_flag == "none") {
    reset = std::nullopt;  // flip-flops start at X
  } else if (reset_flag.empty()) {
    reset = std::vector<Sig>(nl.flops.size(), Sig::lo);
  } else {
    std::vector<Sig> bits;
    for (char c : reset_flag) bits.push_back(sig_from_char(c));
    reset = std::move(bits);
  }

  std::optional<Stimuli> stimuli;
  if (!stimuli_path.empty()) stimuli = parse_stimuli_text(read_file(stimuli_path));

  std::vector<std::string> watch;
  if (!watch_flag.empty()) watch = split_order(watch_flag);

  Waveform wf = simulate(nl, cycles, stimuli ? &*stimuli : nullptr, reset, watch);
  write_output(common.out, wf.to_csv());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lsyn - two-level logic synthesis toolkit"};
  app.require_subcommand(1);

  CommonArgs common;
  std::string source, source_b;
  std::string form = "sop", strategy = "exact", target = "aoi", ff = "d";
  std::string dot_path, reset_flag, stimuli_path, watch_flag;
  std::size_t capacity = std::numeric_limits<std::size_t>::max();
  std::size_t pal_terms = 3;
  std::size_t bound = 24, exact_limit = 16, cycles = 0;
  int rc = 0;

  auto add_common = [&](CLI::App* sub, bool with_out = true) {
    sub->add_option("--order", common.order, "comma-separated variable order");
    if (with_out) sub->add_option("--out", common.out, "write the result to a file");
  };

  auto* parse_cmd = app.add_subcommand("parse", "parse and re-render an expression");
  parse_cmd->add_option("expression", source)->required();
  add_common(parse_cmd);
  parse_cmd->callback([&] { rc = cmd_parse(source, common); });

  auto* table_cmd = app.add_subcommand("table", "print the truth table");
  table_cmd->add_option("source", source, "expression, equations file or PLA file")
      ->required();
  add_common(table_cmd);
  table_cmd->callback([&] { rc = cmd_table(source, common); });

  auto* kmap_cmd = app.add_subcommand("kmap", "print the Karnaugh map (2-4 variables)");
  kmap_cmd->add_option("source", source)->required();
  add_common(kmap_cmd);
  kmap_cmd->callback([&] { rc = cmd_kmap(source, common); });

  auto* min_cmd = app.add_subcommand("minimize", "exact two-level minimization");
  min_cmd->add_option("source", source)->required();
  min_cmd->add_option("--form", form, "sop or pos (default sop)");
  min_cmd->add_option("--strategy", strategy, "exact or greedy (default exact)");
  min_cmd->add_option("--exact-limit", exact_limit,
                      "variable limit for the exact strategy (default 16)");
  add_common(min_cmd);
  min_cmd->callback([&] { rc = cmd_minimize(source, common, form, strategy, exact_limit); });

  auto* check_cmd = app.add_subcommand("check", "equivalence of two expressions");
  check_cmd->add_option("expression-a", source)->required();
  check_cmd->add_option("expression-b", source_b)->required();
  check_cmd->add_option("--bound", bound, "variable bound (default 24)");
  add_common(check_cmd);
  check_cmd->callback([&] { rc = cmd_check(source, source_b, common, bound); });

  auto* synth_cmd = app.add_subcommand("synth", "map onto a netlist or device");
  synth_cmd->add_option("source", source)->required();
  synth_cmd->add_option("--target", target, "aoi, pla, pal or mux (default aoi)");
  synth_cmd->add_option("--form", form, "cover form for aoi (default sop)");
  synth_cmd->add_option("--capacity", capacity, "PLA product-term capacity");
  synth_cmd->add_option("--terms", pal_terms, "PAL per-output term budget (default 3)");
  synth_cmd->add_option("--dot", dot_path, "also write a Graphviz diagram");
  add_common(synth_cmd);
  synth_cmd->callback([&] {
    rc = cmd_synth(source, common, target, form, capacity, pal_terms, dot_path);
  });

  auto* fsm_cmd = app.add_subcommand("fsm", "synthesize a state table");
  fsm_cmd->add_option("state-table", source, "state table file")->required();
  fsm_cmd->add_option("--ff", ff, "flip-flop kind: d or jk (default d)");
  fsm_cmd->add_option("--dot", dot_path, "also write a Graphviz diagram");
  fsm_cmd->add_option("--exact-limit", exact_limit,
                      "variable limit for exact minimization");
  add_common(fsm_cmd);
  fsm_cmd->callback([&] { rc = cmd_fsm(source, common, ff, dot_path, exact_limit); });

  auto* sim_cmd = app.add_subcommand("sim", "clocked simulation to waveform CSV");
  sim_cmd->add_option("netlist", source, "netlist file")->required();
  sim_cmd->add_option("--cycles", cycles, "number of clock cycles")->required();
  sim_cmd->add_option("--reset", reset_flag,
                      "initial flip-flop values (default all zeros; 'none' for X)");
  sim_cmd->add_option("--stimuli", stimuli_path, "per-cycle primary input file");
  sim_cmd->add_option("--watch", watch_flag, "comma-separated nets to record");
  add_common(sim_cmd);
  sim_cmd->callback([&] {
    rc = cmd_sim(source, common, cycles, reset_flag, stimuli_path, watch_flag);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const lsyn::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
