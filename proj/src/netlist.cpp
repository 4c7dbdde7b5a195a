#include "lsyn/netlist.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lsyn {

const char* gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::g_and: return "AND";
    case GateKind::g_or: return "OR";
    case GateKind::g_not: return "NOT";
    case GateKind::g_nand: return "NAND";
    case GateKind::g_nor: return "NOR";
    case GateKind::g_xor: return "XOR";
    case GateKind::g_xnor: return "XNOR";
    case GateKind::g_const0: return "CONST0";
    case GateKind::g_const1: return "CONST1";
  }
  throw std::logic_error("bad gate kind");
}

GateKind gate_kind_from_name(const std::string& name) {
  if (name == "AND") return GateKind::g_and;
  if (name == "OR") return GateKind::g_or;
  if (name == "NOT") return GateKind::g_not;
  if (name == "NAND") return GateKind::g_nand;
  if (name == "NOR") return GateKind::g_nor;
  if (name == "XOR") return GateKind::g_xor;
  if (name == "XNOR") return GateKind::g_xnor;
  if (name == "CONST0") return GateKind::g_const0;
  if (name == "CONST1") return GateKind::g_const1;
  throw Error("unknown gate kind '" + name + "'");
}

const char* flop_kind_name(FlopKind k) {
  switch (k) {
    case FlopKind::d: return "D";
    case FlopKind::jk: return "JK";
    case FlopKind::rs: return "RS";
    case FlopKind::sr_latch: return "SR_LATCH";
  }
  throw std::logic_error("bad flop kind");
}

FlopKind flop_kind_from_name(const std::string& name) {
  if (name == "D") return FlopKind::d;
  if (name == "JK") return FlopKind::jk;
  if (name == "RS") return FlopKind::rs;
  if (name == "SR_LATCH") return FlopKind::sr_latch;
  throw Error("unknown flip-flop kind '" + name + "'");
}

std::size_t flop_arity(FlopKind k) { return k == FlopKind::d ? 1 : 2; }

char sig_char(Sig s) {
  switch (s) {
    case Sig::lo: return '0';
    case Sig::hi: return '1';
    case Sig::x: return 'X';
  }
  throw std::logic_error("bad signal");
}

Sig sig_from_char(char c) {
  switch (c) {
    case '0': return Sig::lo;
    case '1': return Sig::hi;
    case 'X':
    case 'x': return Sig::x;
    default: throw Error(std::string("invalid signal character '") + c + "'");
  }
}

Sig sig_not(Sig s) {
  if (s == Sig::x) return Sig::x;
  return s == Sig::lo ? Sig::hi : Sig::lo;
}

// ---------------------------------------------------------------------------
// Structure checks

namespace {

std::size_t gate_min_arity(GateKind k) {
  switch (k) {
    case GateKind::g_not: return 1;
    case GateKind::g_const0:
    case GateKind::g_const1: return 0;
    default: return 2;
  }
}

std::map<std::string, std::size_t> gate_driver_map(const Netlist& nl) {
  // net -> driving gate index; primary inputs and flop outputs are sources.
  std::map<std::string, std::size_t> drivers;
  for (std::size_t g = 0; g < nl.gates.size(); ++g) drivers.emplace(nl.gates[g].output, g);
  return drivers;
}

}  // namespace

void Netlist::validate() const {
  std::set<std::string> ids;
  for (const auto& g : gates)
    if (g.id.empty() || !ids.insert(g.id).second)
      throw Error("duplicate or empty gate id '" + g.id + "'");
  for (const auto& f : flops)
    if (f.id.empty() || !ids.insert(f.id).second)
      throw Error("duplicate or empty flip-flop id '" + f.id + "'");

  std::set<std::string> driven;
  auto claim = [&](const std::string& net, const std::string& what) {
    if (net.empty()) throw Error(what + " has an empty net name");
    if (!driven.insert(net).second) throw Error("net '" + net + "' has more than one driver");
  };
  for (const auto& in : inputs) claim(in, "primary input");
  for (const auto& g : gates) claim(g.output, "gate " + g.id);
  for (const auto& f : flops) {
    claim(f.q, "flip-flop " + f.id);
    if (!f.qbar.empty()) claim(f.qbar, "flip-flop " + f.id);
  }

  auto require_driven = [&](const std::string& net, const std::string& what) {
    if (!driven.count(net)) throw Error(what + " uses undriven net '" + net + "'");
  };
  for (const auto& g : gates) {
    std::size_t min = gate_min_arity(g.kind);
    bool constant = g.kind == GateKind::g_const0 || g.kind == GateKind::g_const1;
    if (constant && !g.inputs.empty())
      throw Error("constant gate " + g.id + " takes no inputs");
    if (g.kind == GateKind::g_not && g.inputs.size() != 1)
      throw Error("NOT gate " + g.id + " needs exactly one input");
    if (!constant && g.kind != GateKind::g_not && g.inputs.size() < min)
      throw Error("gate " + g.id + " needs at least 2 inputs");
    for (const auto& in : g.inputs) require_driven(in, "gate " + g.id);
  }
  for (const auto& f : flops) {
    if (f.kind == FlopKind::sr_latch)
      throw Error("flip-flop " + f.id + ": SR latches are not clocked elements");
    if (f.inputs.size() != flop_arity(f.kind))
      throw Error("flip-flop " + f.id + " has wrong input count");
    for (const auto& in : f.inputs) require_driven(in, "flip-flop " + f.id);
  }
  for (const auto& out : outputs) require_driven(out, "primary output");

  topo_order();  // throws on combinational cycles
}

std::vector<std::size_t> Netlist::topo_order() const {
  auto drivers = gate_driver_map(*this);
  // Pending gate-input dependencies per gate.
  std::vector<std::size_t> pending(gates.size(), 0);
  std::vector<std::vector<std::size_t>> dependents(gates.size());
  for (std::size_t g = 0; g < gates.size(); ++g) {
    for (const auto& in : gates[g].inputs) {
      auto it = drivers.find(in);
      if (it != drivers.end()) {
        ++pending[g];
        dependents[it->second].push_back(g);
      }
    }
  }
  std::set<std::size_t> ready;
  for (std::size_t g = 0; g < gates.size(); ++g)
    if (pending[g] == 0) ready.insert(g);

  std::vector<std::size_t> order;
  order.reserve(gates.size());
  while (!ready.empty()) {
    std::size_t g = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(g);
    for (auto d : dependents[g])
      if (--pending[d] == 0) ready.insert(d);
  }
  if (order.size() != gates.size()) {
    for (std::size_t g = 0; g < gates.size(); ++g)
      if (pending[g] != 0)
        throw Error("combinational cycle involving gate '" + gates[g].id + "'");
  }
  return order;
}

// ---------------------------------------------------------------------------
// Synthesis

std::string emit_cover_logic(Netlist& nl, const Cover& c, const std::string& prefix,
                             const std::string& out_net, const LiteralResolver& literal) {
  bool sop = c.form == CoverForm::sop;
  bool universal = std::any_of(c.cubes.begin(), c.cubes.end(),
                               [](const Cube& q) { return q.mask == 0; });
  if (c.cubes.empty() || universal) {
    bool value = sop ? universal : !universal;
    nl.gates.push_back(Gate{prefix + "_g", value ? GateKind::g_const1 : GateKind::g_const0,
                            {}, out_net});
    return out_net;
  }

  std::size_t n = c.var_count();
  std::vector<std::string> term_nets;
  for (std::size_t i = 0; i < c.cubes.size(); ++i) {
    std::vector<std::string> lit_nets;
    for (std::size_t k = 0; k < n; ++k) {
      LitState s = c.cubes[i].state(n, k);
      if (s == LitState::absent) continue;
      lit_nets.push_back(literal(k, s == LitState::pos));
    }
    if (lit_nets.size() == 1) {
      term_nets.push_back(lit_nets.front());
      continue;
    }
    std::string id = prefix + "_t" + std::to_string(i);
    bool final_gate = c.cubes.size() == 1;
    std::string out = final_gate ? out_net : id + "_o";
    if (final_gate) id = prefix + "_g";
    nl.gates.push_back(Gate{id, sop ? GateKind::g_and : GateKind::g_or,
                            std::move(lit_nets), out});
    if (final_gate) return out;
    term_nets.push_back(nl.gates.back().output);
  }
  if (term_nets.size() == 1) return term_nets.front();  // single-literal cube
  nl.gates.push_back(Gate{prefix + "_g", sop ? GateKind::g_or : GateKind::g_and,
                          std::move(term_nets), out_net});
  return out_net;
}

Netlist synth_aoi(const Cover& c, const std::string& output_name) {
  c.validate();
  bool universal = std::any_of(c.cubes.begin(), c.cubes.end(),
                               [](const Cube& q) { return q.mask == 0; });
  if (c.cubes.empty() || universal)
    throw Error("degenerate cover; emit a constant instead");

  Netlist nl;
  nl.inputs = c.order;
  std::size_t n = c.var_count();

  // One shared inverter per variable that appears complemented.
  std::map<std::size_t, std::string> inverted;
  for (std::size_t k = 0; k < n; ++k) {
    bool needed = std::any_of(c.cubes.begin(), c.cubes.end(), [&](const Cube& q) {
      return q.state(n, k) == LitState::neg;
    });
    if (needed) {
      std::string id = "inv_" + c.order[k];
      nl.gates.push_back(Gate{id, GateKind::g_not, {c.order[k]}, id + "_o"});
      inverted.emplace(k, nl.gates.back().output);
    }
  }
  auto literal = [&](std::size_t k, bool positive) {
    return positive ? c.order[k] : inverted.at(k);
  };
  std::string out = emit_cover_logic(nl, c, output_name, output_name, literal);
  nl.outputs = {out};
  nl.validate();
  return nl;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

Sig eval_gate(GateKind kind, const std::vector<Sig>& ins) {
  switch (kind) {
    case GateKind::g_const0: return Sig::lo;
    case GateKind::g_const1: return Sig::hi;
    case GateKind::g_not: return sig_not(ins[0]);
    case GateKind::g_and:
    case GateKind::g_nand: {
      Sig out = Sig::hi;
      for (Sig s : ins) {
        if (s == Sig::lo) { out = Sig::lo; break; }
        if (s == Sig::x) out = Sig::x;
      }
      return kind == GateKind::g_and ? out : sig_not(out);
    }
    case GateKind::g_or:
    case GateKind::g_nor: {
      Sig out = Sig::lo;
      for (Sig s : ins) {
        if (s == Sig::hi) { out = Sig::hi; break; }
        if (s == Sig::x) out = Sig::x;
      }
      return kind == GateKind::g_or ? out : sig_not(out);
    }
    case GateKind::g_xor:
    case GateKind::g_xnor: {
      bool odd = false;
      for (Sig s : ins) {
        if (s == Sig::x) return Sig::x;
        odd ^= (s == Sig::hi);
      }
      if (kind == GateKind::g_xnor) odd = !odd;
      return sig_of(odd);
    }
  }
  throw std::logic_error("bad gate kind");
}

}  // namespace

std::map<std::string, Sig> eval_signals(const Netlist& nl,
                                        const std::map<std::string, Sig>& sources) {
  std::map<std::string, Sig> values = sources;
  for (auto g : nl.topo_order()) {
    const Gate& gate = nl.gates[g];
    std::vector<Sig> ins;
    ins.reserve(gate.inputs.size());
    for (const auto& in : gate.inputs) {
      auto it = values.find(in);
      if (it == values.end()) throw Error("no value for net '" + in + "'");
      ins.push_back(it->second);
    }
    values[gate.output] = eval_gate(gate.kind, ins);
  }
  return values;
}

std::map<std::string, bool> eval_comb(const Netlist& nl,
                                      const std::map<std::string, bool>& inputs) {
  nl.validate();
  if (!nl.flops.empty()) throw Error("netlist contains flip-flops; use simulate");
  std::map<std::string, Sig> sources;
  for (const auto& in : nl.inputs) {
    auto it = inputs.find(in);
    if (it == inputs.end()) throw Error("missing value for primary input '" + in + "'");
    sources.emplace(in, sig_of(it->second));
  }
  auto values = eval_signals(nl, sources);
  std::map<std::string, bool> out;
  for (const auto& o : nl.outputs) out[o] = values.at(o) == Sig::hi;
  return out;
}

GateStats stats(const Netlist& nl) {
  GateStats s;
  auto drivers = gate_driver_map(nl);

  std::set<std::string> source_nets(nl.inputs.begin(), nl.inputs.end());
  for (const auto& f : nl.flops) {
    source_nets.insert(f.q);
    if (!f.qbar.empty()) source_nets.insert(f.qbar);
  }
  std::set<std::string> literal_nets = source_nets;
  for (const auto& g : nl.gates)
    if (g.kind == GateKind::g_not && source_nets.count(g.inputs.front()))
      literal_nets.insert(g.output);

  std::vector<std::size_t> depth(nl.gates.size(), 0);
  for (auto g : nl.topo_order()) {
    const Gate& gate = nl.gates[g];
    ++s.count[gate.kind];
    std::size_t d = 1;
    for (const auto& in : gate.inputs) {
      auto it = drivers.find(in);
      if (it != drivers.end()) d = std::max(d, depth[it->second] + 1);
      if (gate.kind != GateKind::g_not && literal_nets.count(in)) ++s.literals;
    }
    depth[g] = d;
    s.depth = std::max(s.depth, d);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Text format

std::string write_netlist_text(const Netlist& nl) {
  std::ostringstream out;
  for (const auto& in : nl.inputs) out << "input " << in << '\n';
  for (const auto& o : nl.outputs) out << "output " << o << '\n';
  for (const auto& g : nl.gates) {
    out << "gate " << g.id << ' ' << gate_kind_name(g.kind);
    for (const auto& in : g.inputs) out << ' ' << in;
    out << " -> " << g.output << '\n';
  }
  for (const auto& f : nl.flops) {
    out << "dff " << f.id << ' ' << flop_kind_name(f.kind);
    for (const auto& in : f.inputs) out << ' ' << in;
    out << " -> " << f.q;
    if (!f.qbar.empty()) out << ' ' << f.qbar;
    out << '\n';
  }
  return out.str();
}

Netlist parse_netlist_text(const std::string& text) {
  Netlist nl;
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
    if (toks[0] == "input") {
      if (toks.size() != 2) fail("expected 'input <net>'");
      nl.inputs.push_back(toks[1]);
    } else if (toks[0] == "output") {
      if (toks.size() != 2) fail("expected 'output <net>'");
      nl.outputs.push_back(toks[1]);
    } else if (toks[0] == "gate" || toks[0] == "dff") {
      auto arrow = std::find(toks.begin(), toks.end(), "->");
      if (toks.size() < 4 || arrow == toks.end() || arrow - toks.begin() < 3)
        fail("expected '" + toks[0] + " <id> <KIND> <in...> -> <out...>'");
      std::vector<std::string> ins(toks.begin() + 3, arrow);
      std::vector<std::string> outs(arrow + 1, toks.end());
      if (toks[0] == "gate") {
        if (outs.size() != 1) fail("gate needs exactly one output net");
        Gate g;
        g.id = toks[1];
        try {
          g.kind = gate_kind_from_name(toks[2]);
        } catch (const Error& e) {
          fail(e.what());
        }
        g.inputs = std::move(ins);
        g.output = outs[0];
        nl.gates.push_back(std::move(g));
      } else {
        if (outs.empty() || outs.size() > 2) fail("dff needs '-> <Q> [<Qbar>]'");
        Flop f;
        f.id = toks[1];
        try {
          f.kind = flop_kind_from_name(toks[2]);
        } catch (const Error& e) {
          fail(e.what());
        }
        f.inputs = std::move(ins);
        f.q = outs[0];
        if (outs.size() == 2) f.qbar = outs[1];
        nl.flops.push_back(std::move(f));
      }
    } else {
      fail("unknown directive '" + toks[0] + "'");
    }
  }
  nl.validate();
  return nl;
}

std::string to_dot(const Netlist& nl) {
  std::ostringstream out;
  out << "digraph netlist {\n  rankdir=LR;\n";
  auto drivers = gate_driver_map(nl);
  std::map<std::string, std::string> node_of_net;  // net -> dot node
  for (const auto& in : nl.inputs) {
    out << "  \"" << in << "\" [shape=ellipse];\n";
    node_of_net[in] = in;
  }
  for (const auto& g : nl.gates) {
    out << "  \"" << g.id << "\" [shape=box,label=\"" << gate_kind_name(g.kind) << "\\n"
        << g.id << "\"];\n";
    node_of_net[g.output] = g.id;
  }
  for (const auto& f : nl.flops) {
    out << "  \"" << f.id << "\" [shape=Msquare,label=\"" << flop_kind_name(f.kind) << "\\n"
        << f.id << "\"];\n";
    node_of_net[f.q] = f.id;
    if (!f.qbar.empty()) node_of_net[f.qbar] = f.id;
  }
  for (const auto& g : nl.gates)
    for (const auto& in : g.inputs)
      out << "  \"" << node_of_net.at(in) << "\" -> \"" << g.id << "\" [label=\"" << in
          << "\"];\n";
  for (const auto& f : nl.flops)
    for (const auto& in : f.inputs)
      out << "  \"" << node_of_net.at(in) << "\" -> \"" << f.id << "\" [label=\"" << in
          << "\"];\n";
  for (const auto& o : nl.outputs) {
    out << "  \"out:" << o << "\" [shape=doublecircle,label=\"" << o << "\"];\n";
    out << "  \"" << node_of_net.at(o) << "\" -> \"out:" << o << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace lsyn
