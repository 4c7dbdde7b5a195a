#pragma once

#include <optional>

#include "lsyn/minimize.hpp"
#include "lsyn/netlist.hpp"

namespace lsyn {

/// Result of one clock edge for a storage element. invalid marks the
/// forbidden input combination; the simulator turns it into X.
struct FFNext {
  bool invalid = false;
  Sig q = Sig::x;
};

/// Characteristic tables:
///   RS (S,R):       00 hold, 01 reset, 10 set, 11 invalid
///   JK (J,K):       00 hold, 01 reset, 10 set, 11 toggle
///   D  (D):         0 reset, 1 set
///   SR latch (S,R): active low - 01 set, 10 reset, 11 hold, 00 invalid
/// Any X input yields X; hold/toggle of an X state stays X.
FFNext ff_next(FlopKind kind, const std::vector<Sig>& inputs, Sig q);

/// Input-free Moore chain: each state has exactly one successor.
struct StateDiagram {
  std::vector<std::string> states;
  std::vector<std::size_t> next;  // parallel to states
};

/// Present-state -> next-state map for w flip-flops. Row s holds the next
/// state of present code s, one Trit per bit; dc bits are unconstrained and
/// unused codes are all-dc rows.
struct StateTable {
  std::size_t width = 0;
  std::vector<std::vector<Trit>> next;  // 2^w rows of w trits
  std::optional<std::uint32_t> reset;   // from the file format, if given

  bool row_defined(std::uint32_t state) const;
  /// Next code for a fully defined row.
  std::uint32_t next_code(std::uint32_t state) const;
  void validate() const;
};

/// Codes states in declaration order, counting up in binary, with
/// width ceil(log2(count)) (1 for a single state); unused codes become
/// don't-care rows.
StateTable encode_states(const StateDiagram& d);

/// State bit i is named Qa, Qb, ... (i = 0 is the most significant).
std::string state_var_name(std::size_t bit);

/// One flip-flop input equation as a truth table over the present-state
/// variables, e.g. name "Da" or "Ja"/"Ka".
struct Excitation {
  std::string name;
  TruthTable table;
};

/// D: input i equals next-state bit i. JK: the standard excitation table
/// (0->0 J=0 K=-, 0->1 J=1 K=-, 1->0 J=- K=1, 1->1 J=- K=0). Don't-care
/// next bits stay don't-care.
std::vector<Excitation> excitation_equations(const StateTable& st, FlopKind kind);

/// Minimizes each excitation (EXACT by default), realizes it as two-level
/// logic over the Q/Q' nets and wires the flip-flops with feedback. Primary
/// outputs are the state bits.
Netlist synth_fsm(const StateTable& st, FlopKind kind, const MinimizeOptions& opts = {});

/// Per-cycle primary input values; every primary input must be present.
struct Stimuli {
  std::vector<std::string> nets;
  std::vector<std::vector<Sig>> rows;  // one row per cycle
};

/// Text format: a header line of net names, then one line of 0/1/X values
/// per cycle.
Stimuli parse_stimuli_text(const std::string& text);

/// Sampled once per clock cycle, immediately after the rising edge; row k is
/// the circuit state after k+1 edges from reset.
struct Waveform {
  std::vector<std::string> nets;
  std::vector<std::vector<Sig>> rows;

  /// CSV with a leading "cycle" column counting edges from 1.
  std::string to_csv() const;
};

/// Synchronous simulation: each cycle evaluates the combinational logic from
/// the current flip-flop outputs and that cycle's stimuli, then updates all
/// flip-flops simultaneously on the rising edge. An invalid flip-flop input
/// combination drives its Q to X; X propagates pessimistically. Without a
/// reset vector the flip-flops start at X. `watch` defaults to primary
/// inputs, flip-flop Qs and primary outputs.
Waveform simulate(const Netlist& nl, std::size_t cycles, const Stimuli* stimuli = nullptr,
                  const std::optional<std::vector<Sig>>& reset = std::nullopt,
                  const std::vector<std::string>& watch = {});

/// State-table text format:
///   states <w>
///   <present bits> -> <next bits>   ('-' allowed on the next side)
///   reset <bits>                    (optional)
/// with '#' comments; unlisted present states are don't-care rows.
StateTable parse_state_table_text(const std::string& text);

}  // namespace lsyn
