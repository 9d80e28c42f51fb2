#include "revlab/revcircuit/bennett.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace revlab::circuit {

namespace {
constexpr std::size_t kMaxInputs = 20;
constexpr std::size_t kMaxOutputs = 64;
}  // namespace

void TruthTable::validate() const {
  if (rows.empty()) throw CircuitError("truth table is empty");
  if (inputs > kMaxInputs) throw CircuitError("truth table has too many inputs");
  if (outputs == 0 || outputs > kMaxOutputs) throw CircuitError("truth table output arity must be in [1, 64]");
  if (rows.size() != (std::size_t{1} << inputs)) {
    throw CircuitError("truth table has " + std::to_string(rows.size()) + " rows, expected 2^" +
                       std::to_string(inputs));
  }
  const std::uint64_t mask = outputs == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << outputs) - 1;
  for (auto r : rows) {
    if (r & ~mask) throw CircuitError("truth table row wider than declared output arity");
  }
}

BitString TruthTable::input_bits(std::uint64_t row) const {
  BitString b(inputs);
  for (std::size_t i = 0; i < inputs; ++i) b.set(i, (row >> (inputs - 1 - i)) & 1);
  return b;
}

BitString TruthTable::output_bits(std::uint64_t row) const {
  BitString b(outputs);
  for (std::size_t j = 0; j < outputs; ++j) b.set(j, (rows[row] >> (outputs - 1 - j)) & 1);
  return b;
}

BitString BennettCircuit::run(const BitString& x) const {
  if (x.size() != inputs) throw CircuitError("input length does not match compiled function arity");
  BitString state(circuit.width());
  for (std::size_t i = 0; i < inputs; ++i) state.set(i, x[i]);
  return circuit.eval(state);
}

BennettCircuit bennett_compile(const TruthTable& f) {
  f.validate();
  const std::size_t n = f.inputs;
  const std::size_t m = f.outputs;

  // Möbius transform per output column: anf[mask] = 1 iff the monomial over
  // the variables in `mask` appears. Mask bit j is row-index bit j, which is
  // input wire n - 1 - j.
  std::map<std::uint64_t, std::vector<std::size_t>> monomials;  // mask -> output wires
  std::size_t max_degree = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t shift = m - 1 - j;
    std::vector<std::uint8_t> anf(f.rows.size());
    for (std::size_t r = 0; r < f.rows.size(); ++r) anf[r] = (f.rows[r] >> shift) & 1;
    for (std::size_t bit = 0; bit < n; ++bit) {
      for (std::size_t r = 0; r < anf.size(); ++r) {
        if (r & (std::size_t{1} << bit)) anf[r] ^= anf[r ^ (std::size_t{1} << bit)];
      }
    }
    for (std::size_t mask = 0; mask < anf.size(); ++mask) {
      if (!anf[mask]) continue;
      monomials[mask].push_back(n + j);
      max_degree = std::max<std::size_t>(max_degree, std::popcount(mask));
    }
  }

  const std::size_t ancillae = max_degree > 2 ? max_degree - 2 : 0;
  const auto anc = [&](std::size_t i) { return static_cast<std::uint32_t>(n + m + i); };
  std::vector<Gate> gates;
  for (const auto& [mask, outs] : monomials) {
    std::vector<std::uint32_t> vars;
    for (std::size_t bit = 0; bit < n; ++bit) {
      if (mask & (std::uint64_t{1} << bit)) vars.push_back(static_cast<std::uint32_t>(n - 1 - bit));
    }
    std::sort(vars.begin(), vars.end());
    const std::size_t d = vars.size();
    if (d == 0) {
      for (auto o : outs) gates.push_back(Gate::x(static_cast<std::uint32_t>(o)));
    } else if (d == 1) {
      for (auto o : outs) gates.push_back(Gate::cx(vars[0], static_cast<std::uint32_t>(o)));
    } else if (d == 2) {
      for (auto o : outs) gates.push_back(Gate::ccx(vars[0], vars[1], static_cast<std::uint32_t>(o)));
    } else {
      // compute: anc[0] = v0 v1, anc[i] = anc[i-1] v_{i+1}, up to anc[d-3]
      std::vector<Gate> ladder;
      ladder.push_back(Gate::ccx(vars[0], vars[1], anc(0)));
      for (std::size_t i = 1; i + 2 < d; ++i) ladder.push_back(Gate::ccx(anc(i - 1), vars[i + 1], anc(i)));
      gates.insert(gates.end(), ladder.begin(), ladder.end());
      // copy
      for (auto o : outs) gates.push_back(Gate::ccx(anc(d - 3), vars[d - 1], static_cast<std::uint32_t>(o)));
      // uncompute
      gates.insert(gates.end(), ladder.rbegin(), ladder.rend());
    }
  }
  return BennettCircuit{Circuit(n + m + ancillae, std::move(gates)), n, m, ancillae};
}

}  // namespace revlab::circuit
