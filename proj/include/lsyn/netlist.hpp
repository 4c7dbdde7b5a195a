#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lsyn/cover.hpp"

namespace lsyn {

enum class GateKind : unsigned char {
  g_and,
  g_or,
  g_not,
  g_nand,
  g_nor,
  g_xor,
  g_xnor,
  g_const0,
  g_const1,
};

const char* gate_kind_name(GateKind k);
GateKind gate_kind_from_name(const std::string& name);

/// Storage element kinds. sr_latch has a characteristic table (seq module)
/// but is level-sensitive and not allowed inside clocked netlists.
enum class FlopKind : unsigned char { d, jk, rs, sr_latch };

const char* flop_kind_name(FlopKind k);
FlopKind flop_kind_from_name(const std::string& name);
std::size_t flop_arity(FlopKind k);

/// Three-valued signal used by evaluation and simulation.
enum class Sig : unsigned char { lo = 0, hi = 1, x = 2 };

char sig_char(Sig s);             // '0', '1', 'X'
Sig sig_from_char(char c);
inline Sig sig_of(bool b) { return b ? Sig::hi : Sig::lo; }
Sig sig_not(Sig s);

struct Gate {
  std::string id;
  GateKind kind = GateKind::g_and;
  std::vector<std::string> inputs;
  std::string output;
};

struct Flop {
  std::string id;
  FlopKind kind = FlopKind::d;
  std::vector<std::string> inputs;
  std::string q;
  std::string qbar;  // empty when absent
};

struct GateStats {
  std::map<GateKind, std::size_t> count;
  std::size_t depth = 0;     // longest gate chain
  std::size_t literals = 0;  // literal occurrences feeding non-NOT gates
};

/// Gate-level circuit. Every net has exactly one driver (primary input,
/// gate output, or flip-flop Q/Q'), and the gate subgraph is acyclic with
/// flip-flop Qs as sources and flip-flop inputs as sinks.
struct Netlist {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<Gate> gates;
  std::vector<Flop> flops;

  /// Checks the single-driver rule, fan-in arities, referenced nets and
  /// acyclicity; throws Error.
  void validate() const;

  /// Gate evaluation order; throws Error on a combinational cycle.
  std::vector<std::size_t> topo_order() const;
};

/// Net carrying variable k of the cover order, positive or complemented.
using LiteralResolver = std::function<std::string(std::size_t, bool)>;

/// Appends the two-level logic of a cover. Term gates are "<prefix>_t<i>"
/// and a final combining gate "<prefix>_g" drives out_net; a single-literal
/// cover creates no gate and the literal's net is returned instead. A
/// degenerate cover emits a CONST driver for out_net.
std::string emit_cover_logic(Netlist& nl, const Cover& c, const std::string& prefix,
                             const std::string& out_net, const LiteralResolver& literal);

/// AND-OR-Inverter netlist for an SOP cover (OR-AND for POS): one shared
/// inverter per complemented variable, one gate per multi-literal term, one
/// combining gate. Degenerate covers (empty or universal) are rejected;
/// emit a constant driver instead.
Netlist synth_aoi(const Cover& c, const std::string& output_name = "F");

/// Two-valued combinational evaluation in topological order. The netlist
/// must be flip-flop free and inputs must cover every primary input.
std::map<std::string, bool> eval_comb(const Netlist& nl,
                                      const std::map<std::string, bool>& inputs);

/// Three-valued evaluation from the given source nets (primary inputs plus,
/// in simulation, flip-flop outputs). X propagates pessimistically: a gate
/// output is X unless its defined inputs force the value. Returns values
/// for every net.
std::map<std::string, Sig> eval_signals(const Netlist& nl,
                                        const std::map<std::string, Sig>& sources);

/// Counts per gate kind, logic depth, and literal occurrences (gate inputs
/// fed by a source net or by an inverter of a source net, NOT gates' own
/// inputs excluded).
GateStats stats(const Netlist& nl);

/// Line-based text format:
///   input <net> / output <net>
///   gate <id> <KIND> <in...> -> <out>
///   dff <id> <D|JK|RS> <in...> -> <Q> [<Qbar>]
/// with '#' comments.
std::string write_netlist_text(const Netlist& nl);
Netlist parse_netlist_text(const std::string& text);

/// Graphviz export for documentation.
std::string to_dot(const Netlist& nl);

}  // namespace lsyn
