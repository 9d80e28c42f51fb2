#include "revlab/revcircuit/circuit.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace revlab::circuit {

std::string_view mnemonic(GateKind kind) {
  switch (kind) {
    case GateKind::Not: return "x";
    case GateKind::Cnot: return "cx";
    case GateKind::Toffoli: return "ccx";
    case GateKind::Fredkin: return "cswap";
  }
  return "?";
}

std::size_t control_count(GateKind kind) {
  switch (kind) {
    case GateKind::Not: return 0;
    case GateKind::Cnot: return 1;
    case GateKind::Toffoli: return 2;
    case GateKind::Fredkin: return 1;
  }
  return 0;
}

std::size_t target_count(GateKind kind) { return kind == GateKind::Fredkin ? 2 : 1; }

Gate::Gate(GateKind kind, std::array<std::uint32_t, 3> wires) : kind_(kind), wires_(wires) {
  const auto used = wires_.begin() + static_cast<std::ptrdiff_t>(arity(kind_));
  std::fill(used, wires_.end(), 0u);
  for (auto i = wires_.begin(); i != used; ++i) {
    if (std::find(wires_.begin(), i, *i) != i) {
      throw CircuitError("duplicated wire " + std::to_string(*i) + " in " + std::string(mnemonic(kind_)) +
                         " gate");
    }
  }
}

Gate Gate::x(std::uint32_t target) { return Gate(GateKind::Not, {target, 0, 0}); }

Gate Gate::cx(std::uint32_t control, std::uint32_t target) {
  return Gate(GateKind::Cnot, {control, target, 0});
}

Gate Gate::ccx(std::uint32_t control1, std::uint32_t control2, std::uint32_t target) {
  if (control2 < control1) std::swap(control1, control2);
  return Gate(GateKind::Toffoli, {control1, control2, target});
}

Gate Gate::cswap(std::uint32_t control, std::uint32_t target1, std::uint32_t target2) {
  if (target2 < target1) std::swap(target1, target2);
  return Gate(GateKind::Fredkin, {control, target1, target2});
}

std::uint32_t Gate::max_wire() const {
  auto w = wires();
  return *std::max_element(w.begin(), w.end());
}

void Gate::apply(BitString& state) const {
  const auto& w = wires_;
  switch (kind_) {
    case GateKind::Not:
      state.flip(w[0]);
      break;
    case GateKind::Cnot:
      if (state[w[0]]) state.flip(w[1]);
      break;
    case GateKind::Toffoli:
      if (state[w[0]] && state[w[1]]) state.flip(w[2]);
      break;
    case GateKind::Fredkin:
      if (state[w[0]]) {
        const bool t1 = state[w[1]];
        state.set(w[1], state[w[2]]);
        state.set(w[2], t1);
      }
      break;
  }
}

std::uint64_t Gate::apply(std::uint64_t s) const {
  const auto bit = [s](std::uint32_t i) { return (s >> i) & 1u; };
  const auto& w = wires_;
  switch (kind_) {
    case GateKind::Not:
      return s ^ (std::uint64_t{1} << w[0]);
    case GateKind::Cnot:
      return s ^ (bit(w[0]) << w[1]);
    case GateKind::Toffoli:
      return s ^ ((bit(w[0]) & bit(w[1])) << w[2]);
    case GateKind::Fredkin: {
      const std::uint64_t diff = (bit(w[1]) ^ bit(w[2])) & bit(w[0]);
      return s ^ (diff << w[1]) ^ (diff << w[2]);
    }
  }
  return s;
}

Circuit::Circuit(std::size_t width, std::vector<Gate> gates) : width_(width), gates_(std::move(gates)) {
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    if (gates_[i].max_wire() >= width_) {
      throw CircuitError("gate " + std::to_string(i) + " uses wire " + std::to_string(gates_[i].max_wire()) +
                         " but circuit width is " + std::to_string(width_));
    }
  }
}

BitString Circuit::eval(const BitString& input) const {
  if (input.size() != width_) {
    throw CircuitError("input length " + std::to_string(input.size()) + " does not match circuit width " +
                       std::to_string(width_));
  }
  BitString state = input;
  for (const auto& g : gates_) g.apply(state);
  return state;
}

std::uint64_t Circuit::eval(std::uint64_t input) const {
  if (width_ > 64) throw CircuitError("word evaluation requires width <= 64");
  for (const auto& g : gates_) input = g.apply(input);
  return input;
}

Circuit Circuit::prefix(std::size_t steps) const {
  if (steps > gates_.size()) throw CircuitError("prefix longer than circuit");
  return Circuit(width_, std::vector<Gate>(gates_.begin(), gates_.begin() + static_cast<std::ptrdiff_t>(steps)));
}

Circuit Circuit::then(const Circuit& next) const {
  if (next.width_ != width_) throw CircuitError("cannot compose circuits of different widths");
  std::vector<Gate> all = gates_;
  all.insert(all.end(), next.gates_.begin(), next.gates_.end());
  return Circuit(width_, std::move(all));
}

Circuit invert(const Circuit& c) {
  std::vector<Gate> reversed(c.gates().rbegin(), c.gates().rend());
  return Circuit(c.width(), std::move(reversed));
}

BitString reconstruct_initial(const Circuit& c, const BitString& state_at_step, std::size_t steps) {
  return invert(c.prefix(steps)).eval(state_at_step);
}

namespace {

void require_exhaustive_width(std::size_t width) {
  if (width > kMaxExhaustiveWidth) {
    throw CircuitError("width " + std::to_string(width) + " too large for exhaustive check (max " +
                       std::to_string(kMaxExhaustiveWidth) + ")");
  }
}

}  // namespace

bool permutation_check(std::span<const std::uint64_t> table, std::size_t width) {
  require_exhaustive_width(width);
  const std::uint64_t n = std::uint64_t{1} << width;
  if (table.size() != n) throw CircuitError("mapping table must have 2^width entries");
  std::vector<bool> seen(n, false);
  for (std::uint64_t y : table) {
    if (y >= n || seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

bool permutation_check(const Circuit& c) {
  require_exhaustive_width(c.width());
  const std::uint64_t n = std::uint64_t{1} << c.width();
  std::vector<std::uint64_t> table(n);
  for (std::uint64_t x = 0; x < n; ++x) table[x] = c.eval(x);
  return permutation_check(table, c.width());
}

bool is_conservative(const Circuit& c) {
  require_exhaustive_width(c.width());
  const std::uint64_t n = std::uint64_t{1} << c.width();
  for (std::uint64_t x = 0; x < n; ++x) {
    if (std::popcount(c.eval(x)) != std::popcount(x)) return false;
  }
  return true;
}

bool is_conservative_by_construction(const Circuit& c) {
  return std::all_of(c.gates().begin(), c.gates().end(),
                     [](const Gate& g) { return g.kind() == GateKind::Fredkin; });
}

}  // namespace revlab::circuit
