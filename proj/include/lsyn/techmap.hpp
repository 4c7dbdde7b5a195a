#pragma once

#include "lsyn/netlist.hpp"

namespace lsyn {

/// Programmable-AND/programmable-OR array. The AND plane holds one cube per
/// product term; outputs_mask bit j on term i means term i feeds output j,
/// so identical terms are shared across outputs.
struct PlaProgram {
  std::size_t num_inputs = 0;
  std::size_t num_outputs = 0;
  std::vector<Cube> terms;
  std::vector<std::uint32_t> outputs_mask;  // parallel to terms

  bool operator==(const PlaProgram&) const = default;
};

/// Programmable-AND/fixed-OR array: every output owns at most
/// terms_per_output product terms and nothing is shared.
struct PalProgram {
  std::size_t num_inputs = 0;
  std::size_t terms_per_output = 0;  // k
  std::vector<std::vector<Cube>> outputs;

  std::size_t num_outputs() const { return outputs.size(); }
  bool operator==(const PalProgram&) const = default;
};

/// Maps SOP covers (over a common order) onto a PLA with `capacity` product
/// terms, sharing identical cubes. Throws Error when the distinct-term count
/// exceeds the capacity, reporting required vs available.
PlaProgram map_pla(const std::vector<Cover>& functions, std::size_t capacity);

/// Maps SOP covers onto a PAL with a fixed per-output term budget; throws
/// Error naming the first output that does not fit. `names` (optional)
/// supplies output names for messages, defaulting to F0, F1, ...
PalProgram map_pal(const std::vector<Cover>& functions, std::size_t per_output_terms,
                   const std::vector<std::string>& names = {});

/// Multiplexer tree by Shannon cofactoring in select_order (a permutation of
/// the table's variables). Each 2-to-1 cell expands to out = S'·d0 + S·d1;
/// constant leaves are folded into wires, inverters, or single gates, and
/// don't-care rows realize as 0.
Netlist map_mux(const TruthTable& t, const VarOrder& select_order,
                const std::string& output_name = "F");

/// Inputs A,B; outputs sum = A XOR B and carry = A AND B.
Netlist half_adder();

/// PLA text format:
///   .i <n> / .o <m> / .p <terms> (optional on input)
///   one "<cube> <output bits>" line per term, output 0 leftmost
///   .e terminator
/// '#' comments; unknown dot-directives are rejected.
std::string write_pla_text(const PlaProgram& p);
PlaProgram parse_pla_text(const std::string& text);

/// Same format plus a required ".pal <k>" line; term lines are one-hot on
/// the output side and grouped per output.
std::string write_pal_text(const PalProgram& p);
PalProgram parse_pal_text(const std::string& text);

/// Single-output views of a PLA, used by the CLI.
TruthTable pla_output_table(const PlaProgram& p, std::size_t output,
                            const VarOrder& order);
Cover pla_output_cover(const PlaProgram& p, std::size_t output, const VarOrder& order);

}  // namespace lsyn
