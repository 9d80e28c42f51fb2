#include <algorithm>

#include "revlab/core/rng.hpp"
#include "revlab/revcircuit/circuit.hpp"

namespace revlab::circuit {

Circuit random_circuit(std::size_t width, std::size_t gate_count, std::span<const GateKind> gate_set,
                       std::uint64_t seed) {
  if (gate_set.empty()) throw CircuitError("random_circuit: gate set is empty");
  for (GateKind k : gate_set) {
    if (arity(k) > width) {
      throw CircuitError("random_circuit: width " + std::to_string(width) + " too small for " +
                         std::string(mnemonic(k)));
    }
  }
  Rng rng(seed);
  std::vector<Gate> gates;
  gates.reserve(gate_count);
  for (std::size_t i = 0; i < gate_count; ++i) {
    const GateKind kind = gate_set[rng.below(gate_set.size())];
    // Distinct wires by rejection; uniform over ordered tuples.
    std::array<std::uint32_t, 3> w{};
    for (std::size_t j = 0; j < arity(kind); ++j) {
      for (;;) {
        const auto cand = static_cast<std::uint32_t>(rng.below(width));
        if (std::find(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j), cand) ==
            w.begin() + static_cast<std::ptrdiff_t>(j)) {
          w[j] = cand;
          break;
        }
      }
    }
    switch (kind) {
      case GateKind::Not: gates.push_back(Gate::x(w[0])); break;
      case GateKind::Cnot: gates.push_back(Gate::cx(w[0], w[1])); break;
      case GateKind::Toffoli: gates.push_back(Gate::ccx(w[0], w[1], w[2])); break;
      case GateKind::Fredkin: gates.push_back(Gate::cswap(w[0], w[1], w[2])); break;
    }
  }
  return Circuit(width, std::move(gates));
}

}  // namespace revlab::circuit
