#pragma once

#include <cstdint>
#include <vector>

#include "revlab/revcircuit/circuit.hpp"

namespace revlab::circuit {

/// Complete table of f: {0,1}^inputs -> {0,1}^outputs.
///
/// rows[r] is f applied to the input whose bit string, read left to right,
/// is the binary numeral r (input bit 0 is the most significant). The output
/// word is read the same way: output bit 0 is bit (outputs - 1) of rows[r].
struct TruthTable {
  std::size_t inputs = 0;
  std::size_t outputs = 0;
  std::vector<std::uint64_t> rows;

  void validate() const;
  BitString input_bits(std::uint64_t row) const;
  BitString output_bits(std::uint64_t row) const;
};

/// Wire layout of a compiled function: inputs on [0, n), outputs on
/// [n, n + m), ancillae on [n + m, n + m + k).
struct BennettCircuit {
  Circuit circuit;
  std::size_t inputs;
  std::size_t outputs;
  std::size_t ancillae;

  /// Evaluates (x, 0^m, 0^k) and returns the full output state.
  BitString run(const BitString& x) const;
};

/// Compute-copy-uncompute lowering of f. Each output column is expanded into
/// its algebraic normal form (XOR of AND-monomials); each monomial is built
/// on a Toffoli ladder of ancillae, XORed into every output that contains it,
/// and the ladder is uncomputed. Degree <= 2 monomials need no ancilla, so
/// the ancilla count is max(0, max degree - 2).
BennettCircuit bennett_compile(const TruthTable& f);

}  // namespace revlab::circuit
