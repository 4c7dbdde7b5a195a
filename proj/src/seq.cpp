#include "lsyn/seq.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace lsyn {

FFNext ff_next(FlopKind kind, const std::vector<Sig>& inputs, Sig q) {
  if (inputs.size() != flop_arity(kind))
    throw Error(std::string(flop_kind_name(kind)) + " takes " +
                std::to_string(flop_arity(kind)) + " input(s), got " +
                std::to_string(inputs.size()));
  for (Sig s : inputs)
    if (s == Sig::x) return {false, Sig::x};

  auto hold = [&]() -> FFNext { return {false, q}; };
  auto toggle = [&]() -> FFNext { return {false, sig_not(q)}; };
  auto set = []() -> FFNext { return {false, Sig::hi}; };
  auto reset = []() -> FFNext { return {false, Sig::lo}; };
  auto invalid = []() -> FFNext { return {true, Sig::x}; };

  switch (kind) {
    case FlopKind::d:
      return {false, inputs[0]};
    case FlopKind::rs: {
      bool s = inputs[0] == Sig::hi, r = inputs[1] == Sig::hi;
      if (!s && !r) return hold();
      if (!s && r) return reset();
      if (s && !r) return set();
      return invalid();
    }
    case FlopKind::jk: {
      bool j = inputs[0] == Sig::hi, k = inputs[1] == Sig::hi;
      if (!j && !k) return hold();
      if (!j && k) return reset();
      if (j && !k) return set();
      return toggle();
    }
    case FlopKind::sr_latch: {
      bool s = inputs[0] == Sig::hi, r = inputs[1] == Sig::hi;
      if (!s && r) return set();    // S active low
      if (s && !r) return reset();  // R active low
      if (s && r) return hold();
      return invalid();
    }
  }
  throw std::logic_error("bad flop kind");
}

// ---------------------------------------------------------------------------
// State tables

bool StateTable::row_defined(std::uint32_t state) const {
  for (Trit t : next[state])
    if (t == Trit::dc) return false;
  return true;
}

std::uint32_t StateTable::next_code(std::uint32_t state) const {
  std::uint32_t code = 0;
  for (Trit t : next[state]) {
    if (t == Trit::dc) throw Error("next state of " + std::to_string(state) + " is not defined");
    code = (code << 1) | static_cast<std::uint32_t>(t == Trit::one);
  }
  return code;
}

void StateTable::validate() const {
  if (width == 0 || width > 16) throw Error("state width must be 1..16");
  if (next.size() != (std::size_t{1} << width))
    throw Error("state table must have one row per code");
  for (const auto& row : next)
    if (row.size() != width) throw Error("next-state rows must have width bits");
}

StateTable encode_states(const StateDiagram& d) {
  if (d.states.empty()) throw Error("state diagram has no states");
  if (d.next.size() != d.states.size())
    throw Error("every state needs exactly one outgoing transition");
  std::set<std::string> seen;
  for (const auto& s : d.states)
    if (s.empty() || !seen.insert(s).second) throw Error("duplicate state name '" + s + "'");
  for (auto n : d.next)
    if (n >= d.states.size()) throw Error("transition target out of range");

  std::size_t count = d.states.size();
  std::size_t width = count == 1 ? 1 : std::bit_width(count - 1);
  StateTable st;
  st.width = width;
  st.next.assign(std::size_t{1} << width, std::vector<Trit>(width, Trit::dc));
  for (std::size_t i = 0; i < count; ++i) {
    std::uint32_t target = static_cast<std::uint32_t>(d.next[i]);
    for (std::size_t b = 0; b < width; ++b)
      st.next[i][b] = ((target >> (width - 1 - b)) & 1u) ? Trit::one : Trit::zero;
  }
  return st;
}

std::string state_var_name(std::size_t bit) {
  return "Q" + std::string(1, static_cast<char>('a' + bit));
}

std::vector<Excitation> excitation_equations(const StateTable& st, FlopKind kind) {
  st.validate();
  if (kind != FlopKind::d && kind != FlopKind::jk)
    throw Error("excitation equations support D and JK flip-flops");

  VarOrder order;
  for (std::size_t b = 0; b < st.width; ++b) order.push_back(state_var_name(b));

  std::vector<Excitation> eqs;
  for (std::size_t b = 0; b < st.width; ++b) {
    std::string suffix(1, static_cast<char>('a' + b));
    if (kind == FlopKind::d) {
      TruthTable t;
      t.order = order;
      for (std::uint32_t s = 0; s < (std::uint32_t{1} << st.width); ++s)
        t.outputs.push_back(st.next[s][b]);
      eqs.push_back({"D" + suffix, std::move(t)});
    } else {
      TruthTable j, k;
      j.order = order;
      k.order = order;
      for (std::uint32_t s = 0; s < (std::uint32_t{1} << st.width); ++s) {
        bool q = ((s >> (st.width - 1 - b)) & 1u) != 0;
        Trit nq = st.next[s][b];
        if (nq == Trit::dc) {
          j.outputs.push_back(Trit::dc);
          k.outputs.push_back(Trit::dc);
        } else if (!q) {
          j.outputs.push_back(nq);  // 0->nq: J = nq, K = don't care
          k.outputs.push_back(Trit::dc);
        } else {
          j.outputs.push_back(Trit::dc);  // 1->nq: J = don't care, K = !nq
          k.outputs.push_back(nq == Trit::one ? Trit::zero : Trit::one);
        }
      }
      eqs.push_back({"J" + suffix, std::move(j)});
      eqs.push_back({"K" + suffix, std::move(k)});
    }
  }
  return eqs;
}

Netlist synth_fsm(const StateTable& st, FlopKind kind, const MinimizeOptions& opts) {
  auto eqs = excitation_equations(st, kind);

  Netlist nl;
  auto literal = [&](std::size_t k, bool positive) {
    return positive ? state_var_name(k) : state_var_name(k) + "_n";
  };
  std::vector<std::string> eq_nets;
  for (const auto& eq : eqs) {
    Cover cover = minimize_cover(eq.table, CoverForm::sop, opts);
    eq_nets.push_back(emit_cover_logic(nl, cover, eq.name, eq.name, literal));
  }
  for (std::size_t b = 0; b < st.width; ++b) {
    std::string suffix(1, static_cast<char>('a' + b));
    Flop f;
    f.id = "ff_" + suffix;
    f.kind = kind;
    if (kind == FlopKind::d) {
      f.inputs = {eq_nets[b]};
    } else {
      f.inputs = {eq_nets[2 * b], eq_nets[2 * b + 1]};
    }
    f.q = state_var_name(b);
    f.qbar = state_var_name(b) + "_n";
    nl.flops.push_back(std::move(f));
    nl.outputs.push_back(state_var_name(b));
  }
  nl.validate();
  return nl;
}

// ---------------------------------------------------------------------------
// Simulation

Waveform simulate(const Netlist& nl, std::size_t cycles, const Stimuli* stimuli,
                  const std::optional<std::vector<Sig>>& reset,
                  const std::vector<std::string>& watch) {
  nl.validate();
  if (reset && reset->size() != nl.flops.size())
    throw Error("reset vector must have one value per flip-flop");

  std::vector<Sig> q(nl.flops.size(), Sig::x);
  if (reset) q = *reset;

  std::vector<std::string> watched = watch;
  if (watched.empty()) {
    std::set<std::string> seen;
    auto add = [&](const std::string& net) {
      if (seen.insert(net).second) watched.push_back(net);
    };
    for (const auto& in : nl.inputs) add(in);
    for (const auto& f : nl.flops) add(f.q);
    for (const auto& o : nl.outputs) add(o);
  }

  std::map<std::string, std::size_t> stim_col;
  if (stimuli) {
    for (std::size_t i = 0; i < stimuli->nets.size(); ++i) {
      bool known = std::find(nl.inputs.begin(), nl.inputs.end(), stimuli->nets[i]) !=
                   nl.inputs.end();
      if (!known)
        throw Error("stimulus net '" + stimuli->nets[i] + "' is not a primary input");
      stim_col.emplace(stimuli->nets[i], i);
    }
  }

  Waveform wf;
  wf.nets = watched;
  for (std::size_t cycle = 0; cycle < cycles; ++cycle) {
    std::map<std::string, Sig> sources;
    for (const auto& in : nl.inputs) {
      auto it = stim_col.find(in);
      if (it == stim_col.end())
        throw Error("missing stimulus for primary input '" + in + "'");
      if (!stimuli || cycle >= stimuli->rows.size())
        throw Error("missing stimulus row for cycle " + std::to_string(cycle + 1));
      sources[in] = stimuli->rows[cycle][it->second];
    }
    auto load_state = [&]() {
      for (std::size_t f = 0; f < nl.flops.size(); ++f) {
        sources[nl.flops[f].q] = q[f];
        if (!nl.flops[f].qbar.empty()) sources[nl.flops[f].qbar] = sig_not(q[f]);
      }
    };
    load_state();
    auto values = eval_signals(nl, sources);

    // Rising edge: all flip-flops update from the pre-edge net values.
    std::vector<Sig> next_q(nl.flops.size());
    for (std::size_t f = 0; f < nl.flops.size(); ++f) {
      std::vector<Sig> ins;
      for (const auto& in : nl.flops[f].inputs) ins.push_back(values.at(in));
      FFNext r = ff_next(nl.flops[f].kind, ins, q[f]);
      next_q[f] = r.invalid ? Sig::x : r.q;
    }
    q = std::move(next_q);

    // Sample just after the edge: new state, same cycle's inputs.
    load_state();
    values = eval_signals(nl, sources);
    std::vector<Sig> row;
    row.reserve(watched.size());
    for (const auto& net : watched) {
      auto it = values.find(net);
      if (it == values.end()) throw Error("watched net '" + net + "' does not exist");
      row.push_back(it->second);
    }
    wf.rows.push_back(std::move(row));
  }
  return wf;
}

std::string Waveform::to_csv() const {
  std::ostringstream out;
  out << "cycle";
  for (const auto& n : nets) out << ',' << n;
  out << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << (i + 1);
    for (Sig s : rows[i]) out << ',' << sig_char(s);
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

std::vector<std::string> tokenize_line(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  std::istringstream ls(s);
  std::vector<std::string> toks;
  std::string tok;
  while (ls >> tok) toks.push_back(tok);
  return toks;
}

std::uint32_t parse_bits(const std::string& s, std::size_t width, std::size_t lineno) {
  if (s.size() != width)
    throw Error("line " + std::to_string(lineno) + ": expected " + std::to_string(width) +
                " bits, got '" + s + "'");
  std::uint32_t value = 0;
  for (char c : s) {
    if (c != '0' && c != '1')
      throw Error("line " + std::to_string(lineno) + ": bits must be 0/1");
    value = (value << 1) | static_cast<std::uint32_t>(c == '1');
  }
  return value;
}

}  // namespace

StateTable parse_state_table_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  StateTable st;
  bool have_width = false;
  std::vector<bool> seen;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize_line(line);
    if (toks.empty()) continue;
    auto fail = [&](const std::string& msg) -> void {
      throw Error("line " + std::to_string(lineno) + ": " + msg);
    };
    if (toks[0] == "states") {
      if (have_width) fail("duplicate 'states' line");
      if (toks.size() != 2) fail("expected 'states <width>'");
      std::size_t w = 0;
      try {
        w = std::stoul(toks[1]);
      } catch (...) {
        fail("invalid width '" + toks[1] + "'");
      }
      if (w == 0 || w > 16) fail("state width must be 1..16");
      st.width = w;
      st.next.assign(std::size_t{1} << w, std::vector<Trit>(w, Trit::dc));
      seen.assign(st.next.size(), false);
      have_width = true;
    } else if (toks[0] == "reset") {
      if (!have_width) fail("'reset' before 'states'");
      if (toks.size() != 2) fail("expected 'reset <bits>'");
      st.reset = parse_bits(toks[1], st.width, lineno);
    } else {
      if (!have_width) fail("row before 'states'");
      if (toks.size() != 3 || toks[1] != "->") fail("expected '<bits> -> <bits>'");
      std::uint32_t present = parse_bits(toks[0], st.width, lineno);
      if (seen[present]) fail("duplicate present state '" + toks[0] + "'");
      seen[present] = true;
      if (toks[2].size() != st.width) fail("next state must have " +
                                           std::to_string(st.width) + " bits");
      for (std::size_t b = 0; b < st.width; ++b)
        st.next[present][b] = trit_from_char(toks[2][b]);
    }
  }
  if (!have_width) throw Error("state table text is empty");
  return st;
}

Stimuli parse_stimuli_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  Stimuli st;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize_line(line);
    if (toks.empty()) continue;
    if (!have_header) {
      st.nets = toks;
      check_var_order(st.nets);
      have_header = true;
      continue;
    }
    if (toks.size() != st.nets.size())
      throw Error("line " + std::to_string(lineno) + ": expected " +
                  std::to_string(st.nets.size()) + " values");
    std::vector<Sig> row;
    for (const auto& t : toks) {
      if (t.size() != 1)
        throw Error("line " + std::to_string(lineno) + ": values are single characters");
      row.push_back(sig_from_char(t[0]));
    }
    st.rows.push_back(std::move(row));
  }
  if (!have_header) throw Error("stimuli text is empty");
  return st;
}

}  // namespace lsyn
