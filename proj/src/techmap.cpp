#include "lsyn/techmap.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <sstream>

namespace lsyn {

namespace {

void check_sop_functions(const std::vector<Cover>& functions) {
  if (functions.empty()) throw Error("no functions to map");
  for (const auto& f : functions) {
    f.validate();
    if (f.form != CoverForm::sop) throw Error("array mapping requires SOP covers");
    if (f.order != functions.front().order)
      throw Error("covers must share one variable order");
  }
}

}  // namespace

PlaProgram map_pla(const std::vector<Cover>& functions, std::size_t capacity) {
  check_sop_functions(functions);
  if (functions.size() > 32) throw Error("PLA mapping supports at most 32 outputs");

  PlaProgram p;
  p.num_inputs = functions.front().var_count();
  p.num_outputs = functions.size();
  std::map<Cube, std::size_t> index;  // shared AND-plane rows
  for (std::size_t j = 0; j < functions.size(); ++j) {
    for (const auto& cube : functions[j].cubes) {
      auto it = index.find(cube);
      if (it == index.end()) {
        it = index.emplace(cube, p.terms.size()).first;
        p.terms.push_back(cube);
        p.outputs_mask.push_back(0);
      }
      p.outputs_mask[it->second] |= std::uint32_t{1} << j;
    }
  }
  if (p.terms.size() > capacity)
    throw Error("PLA capacity exceeded: need " + std::to_string(p.terms.size()) +
                " product terms, capacity is " + std::to_string(capacity));
  return p;
}

PalProgram map_pal(const std::vector<Cover>& functions, std::size_t per_output_terms,
                   const std::vector<std::string>& names) {
  check_sop_functions(functions);

  PalProgram p;
  p.num_inputs = functions.front().var_count();
  p.terms_per_output = per_output_terms;
  for (std::size_t j = 0; j < functions.size(); ++j) {
    if (functions[j].cubes.size() > per_output_terms) {
      std::string name = j < names.size() ? names[j] : "F" + std::to_string(j);
      throw Error("output " + name + " needs " + std::to_string(functions[j].cubes.size()) +
                  " product terms, PAL budget is " + std::to_string(per_output_terms));
    }
    p.outputs.push_back(functions[j].cubes);
  }
  return p;
}

// ---------------------------------------------------------------------------
// MUX trees

namespace {

struct MuxValue {
  bool is_const = false;
  bool cval = false;
  std::string net;
};

struct MuxBuilder {
  const TruthTable& table;
  Netlist& nl;
  std::map<std::string, std::string> inverted;  // select var -> inverter net
  std::size_t cell = 0;

  std::string invert(const std::string& var) {
    auto it = inverted.find(var);
    if (it != inverted.end()) return it->second;
    std::string id = "inv_" + var;
    nl.gates.push_back(Gate{id, GateKind::g_not, {var}, id + "_o"});
    return inverted.emplace(var, nl.gates.back().output).first->second;
  }

  std::string add_gate(GateKind kind, std::vector<std::string> ins) {
    std::string id = "m" + std::to_string(cell++);
    nl.gates.push_back(Gate{id, kind, std::move(ins), id + "_o"});
    return nl.gates.back().output;
  }

  // out = s'·lo + s·hi with constant folding.
  MuxValue combine(const std::string& s, const MuxValue& lo, const MuxValue& hi) {
    if (lo.is_const && hi.is_const) {
      if (lo.cval == hi.cval) return lo;
      if (!lo.cval) return {false, false, s};      // 0,1 -> wire
      return {false, false, invert(s)};            // 1,0 -> inverter
    }
    if (!lo.is_const && !hi.is_const && lo.net == hi.net) return lo;
    if (lo.is_const)
      return lo.cval ? MuxValue{false, false, add_gate(GateKind::g_or, {invert(s), hi.net})}
                     : MuxValue{false, false, add_gate(GateKind::g_and, {s, hi.net})};
    if (hi.is_const)
      return hi.cval ? MuxValue{false, false, add_gate(GateKind::g_or, {s, lo.net})}
                     : MuxValue{false, false, add_gate(GateKind::g_and, {invert(s), lo.net})};
    std::string a0 = add_gate(GateKind::g_and, {invert(s), lo.net});
    std::string a1 = add_gate(GateKind::g_and, {s, hi.net});
    return {false, false, add_gate(GateKind::g_or, {a0, a1})};
  }

  MuxValue build(const VarOrder& selects, std::size_t depth,
                 std::map<std::string, bool>& assignment) {
    if (depth == selects.size()) {
      std::uint32_t row = 0;
      for (std::size_t k = 0; k < table.var_count(); ++k)
        row = (row << 1) | static_cast<std::uint32_t>(assignment.at(table.order[k]));
      return {true, table.outputs[row] == Trit::one, {}};  // don't-care -> 0
    }
    const std::string& s = selects[depth];
    assignment[s] = false;
    MuxValue lo = build(selects, depth + 1, assignment);
    assignment[s] = true;
    MuxValue hi = build(selects, depth + 1, assignment);
    assignment.erase(s);
    return combine(s, lo, hi);
  }
};

// Renames a gate-driven net when nothing else references it.
bool rename_net(Netlist& nl, const std::string& from, const std::string& to) {
  for (const auto& g : nl.gates)
    for (const auto& in : g.inputs)
      if (in == from) return false;
  for (auto& g : nl.gates) {
    if (g.output == from) {
      g.output = to;
      return true;
    }
  }
  return false;
}

}  // namespace

Netlist map_mux(const TruthTable& t, const VarOrder& select_order,
                const std::string& output_name) {
  t.validate();
  check_var_order(select_order);
  VarOrder sorted_a = t.order, sorted_b = select_order;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b)
    throw Error("select order must be a permutation of the table's variables");

  Netlist nl;
  nl.inputs = t.order;
  MuxBuilder builder{t, nl, {}, 0};
  std::map<std::string, bool> assignment;
  MuxValue result = builder.build(select_order, 0, assignment);

  std::string out_net;
  if (result.is_const) {
    nl.gates.push_back(Gate{output_name + "_g",
                            result.cval ? GateKind::g_const1 : GateKind::g_const0,
                            {}, output_name});
    out_net = output_name;
  } else if (rename_net(nl, result.net, output_name)) {
    out_net = output_name;
  } else {
    out_net = result.net;  // the function is a plain wire from an input
  }
  nl.outputs = {out_net};
  nl.validate();
  return nl;
}

Netlist half_adder() {
  Netlist nl;
  nl.inputs = {"A", "B"};
  nl.gates.push_back(Gate{"xor0", GateKind::g_xor, {"A", "B"}, "sum"});
  nl.gates.push_back(Gate{"and0", GateKind::g_and, {"A", "B"}, "carry"});
  nl.outputs = {"sum", "carry"};
  nl.validate();
  return nl;
}

// ---------------------------------------------------------------------------
// PLA / PAL text

namespace {

std::string output_bits(std::uint32_t mask, std::size_t m) {
  std::string s(m, '0');
  for (std::size_t j = 0; j < m; ++j)
    if (mask & (std::uint32_t{1} << j)) s[j] = '1';
  return s;
}

struct PlaParser {
  bool pal_mode = false;
  std::size_t n = 0, m = 0;
  bool have_i = false, have_o = false, have_e = false;
  std::optional<std::size_t> declared_terms;
  std::optional<std::size_t> pal_k;
  std::vector<Cube> terms;
  std::vector<std::uint32_t> masks;

  void parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::string s = line.substr(0, line.find('#'));
      std::istringstream ls(s);
      std::vector<std::string> toks;
      std::string tok;
      while (ls >> tok) toks.push_back(tok);
      if (toks.empty()) continue;
      auto fail = [&](const std::string& msg) -> void {
        throw Error("line " + std::to_string(lineno) + ": " + msg);
      };
      if (have_e) fail("content after .e");
      if (toks[0][0] == '.') {
        if (toks[0] == ".i" || toks[0] == ".o" || toks[0] == ".p" ||
            (pal_mode && toks[0] == ".pal")) {
          if (toks.size() != 2) fail("expected '" + toks[0] + " <number>'");
          std::size_t value = 0;
          try {
            value = std::stoul(toks[1]);
          } catch (...) {
            fail("invalid number '" + toks[1] + "'");
          }
          if (toks[0] == ".i") {
            if (have_i) fail("duplicate .i");
            if (value == 0 || value > kMaxTableVars) fail("unsupported input count");
            n = value;
            have_i = true;
          } else if (toks[0] == ".o") {
            if (have_o) fail("duplicate .o");
            if (value == 0 || value > 32) fail("unsupported output count");
            m = value;
            have_o = true;
          } else if (toks[0] == ".p") {
            declared_terms = value;
          } else {
            pal_k = value;
          }
        } else if (toks[0] == ".e") {
          have_e = true;
        } else {
          fail("unknown directive '" + toks[0] + "'");
        }
        continue;
      }
      if (!have_i || !have_o) fail("term line before .i/.o");
      if (toks.size() != 2 || toks[0].size() != n || toks[1].size() != m)
        fail("expected '<" + std::to_string(n) + "-char cube> <" + std::to_string(m) +
             " output bits>'");
      Cube cube = Cube::from_chars(toks[0]);
      std::uint32_t mask = 0;
      for (std::size_t j = 0; j < m; ++j) {
        char c = toks[1][j];
        if (c == '1')
          mask |= std::uint32_t{1} << j;
        else if (c != '0')
          fail("output bits must be 0/1");
      }
      terms.push_back(cube);
      masks.push_back(mask);
    }
    if (!have_i || !have_o) throw Error("missing .i/.o declaration");
    if (!have_e) throw Error("missing .e terminator");
    if (declared_terms && *declared_terms != terms.size())
      throw Error(".p declares " + std::to_string(*declared_terms) + " terms but " +
                  std::to_string(terms.size()) + " are present");
    if (pal_mode && !pal_k) throw Error("missing .pal declaration");
  }
};

}  // namespace

std::string write_pla_text(const PlaProgram& p) {
  std::ostringstream out;
  out << ".i " << p.num_inputs << "\n.o " << p.num_outputs << "\n.p " << p.terms.size()
      << '\n';
  for (std::size_t i = 0; i < p.terms.size(); ++i)
    out << p.terms[i].to_chars(p.num_inputs) << ' '
        << output_bits(p.outputs_mask[i], p.num_outputs) << '\n';
  out << ".e\n";
  return out.str();
}

PlaProgram parse_pla_text(const std::string& text) {
  PlaParser parser;
  parser.parse(text);
  PlaProgram p;
  p.num_inputs = parser.n;
  p.num_outputs = parser.m;
  p.terms = std::move(parser.terms);
  p.outputs_mask = std::move(parser.masks);
  return p;
}

std::string write_pal_text(const PalProgram& p) {
  std::size_t total = 0;
  for (const auto& o : p.outputs) total += o.size();
  std::ostringstream out;
  out << ".i " << p.num_inputs << "\n.o " << p.num_outputs() << "\n.pal "
      << p.terms_per_output << "\n.p " << total << '\n';
  for (std::size_t j = 0; j < p.outputs.size(); ++j) {
    std::uint32_t mask = std::uint32_t{1} << j;
    for (const auto& cube : p.outputs[j])
      out << cube.to_chars(p.num_inputs) << ' ' << output_bits(mask, p.num_outputs())
          << '\n';
  }
  out << ".e\n";
  return out.str();
}

PalProgram parse_pal_text(const std::string& text) {
  PlaParser parser;
  parser.pal_mode = true;
  parser.parse(text);
  PalProgram p;
  p.num_inputs = parser.n;
  p.terms_per_output = *parser.pal_k;
  p.outputs.assign(parser.m, {});
  for (std::size_t i = 0; i < parser.terms.size(); ++i) {
    std::uint32_t mask = parser.masks[i];
    if (std::popcount(mask) != 1)
      throw Error("PAL term lines must feed exactly one output");
    std::size_t j = static_cast<std::size_t>(std::countr_zero(mask));
    p.outputs[j].push_back(parser.terms[i]);
    if (p.outputs[j].size() > p.terms_per_output)
      throw Error("output F" + std::to_string(j) + " exceeds the PAL budget of " +
                  std::to_string(p.terms_per_output));
  }
  return p;
}

TruthTable pla_output_table(const PlaProgram& p, std::size_t output, const VarOrder& order) {
  Cover c = pla_output_cover(p, output, order);
  TruthTable t;
  t.order = order;
  for (std::uint32_t row = 0; row < (std::uint32_t{1} << p.num_inputs); ++row)
    t.outputs.push_back(c.eval(row) ? Trit::one : Trit::zero);
  return t;
}

Cover pla_output_cover(const PlaProgram& p, std::size_t output, const VarOrder& order) {
  if (output >= p.num_outputs) throw Error("PLA output index out of range");
  if (order.size() != p.num_inputs) throw Error("order size does not match PLA inputs");
  Cover c;
  c.form = CoverForm::sop;
  c.order = order;
  for (std::size_t i = 0; i < p.terms.size(); ++i)
    if (p.outputs_mask[i] & (std::uint32_t{1} << output)) c.cubes.push_back(p.terms[i]);
  return c;
}

}  // namespace lsyn
