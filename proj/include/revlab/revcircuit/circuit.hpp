#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "revlab/core/bitstring.hpp"

namespace revlab::circuit {

enum class GateKind : std::uint8_t { Not, Cnot, Toffoli, Fredkin };

std::string_view mnemonic(GateKind kind);
std::size_t control_count(GateKind kind);
std::size_t target_count(GateKind kind);
inline std::size_t arity(GateKind kind) { return control_count(kind) + target_count(kind); }

class CircuitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One reversible gate. Wires are stored controls first, then targets.
/// Toffoli controls and Fredkin swap targets are kept sorted ascending so
/// that structurally equal gates compare equal.
class Gate {
 public:
  static Gate x(std::uint32_t target);
  static Gate cx(std::uint32_t control, std::uint32_t target);
  static Gate ccx(std::uint32_t control1, std::uint32_t control2, std::uint32_t target);
  static Gate cswap(std::uint32_t control, std::uint32_t target1, std::uint32_t target2);

  GateKind kind() const { return kind_; }
  std::span<const std::uint32_t> wires() const { return {wires_.data(), arity(kind_)}; }
  std::span<const std::uint32_t> controls() const { return wires().first(control_count(kind_)); }
  std::span<const std::uint32_t> targets() const { return wires().subspan(control_count(kind_)); }
  std::uint32_t max_wire() const;

  void apply(BitString& state) const;
  std::uint64_t apply(std::uint64_t state) const;

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  Gate(GateKind kind, std::array<std::uint32_t, 3> wires);

  GateKind kind_;
  std::array<std::uint32_t, 3> wires_;
};

/// Ordered gate list over `width` wires. Every gate is validated against the
/// width on construction, so every Circuit value induces a bijection.
class Circuit {
 public:
  explicit Circuit(std::size_t width, std::vector<Gate> gates = {});

  static Circuit identity(std::size_t width) { return Circuit(width); }

  std::size_t width() const { return width_; }
  std::size_t size() const { return gates_.size(); }
  const std::vector<Gate>& gates() const { return gates_; }

  BitString eval(const BitString& input) const;
  /// Fast path for width <= 64; bit i of the word is wire i.
  std::uint64_t eval(std::uint64_t input) const;

  /// Gates [0, steps) as a circuit of the same width.
  Circuit prefix(std::size_t steps) const;
  Circuit then(const Circuit& next) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t width_;
  std::vector<Gate> gates_;
};

/// Reversed gate order; every supported gate is its own inverse.
Circuit invert(const Circuit& c);

/// Recovers the state at step 0 from the state after `steps` gates by running
/// the inverse of the first `steps` gates.
BitString reconstruct_initial(const Circuit& c, const BitString& state_at_step, std::size_t steps);

/// Maximum width for exhaustive checks over {0,1}^width.
inline constexpr std::size_t kMaxExhaustiveWidth = 20;

/// True iff the circuit's induced map visits every width-bit output exactly once.
bool permutation_check(const Circuit& c);
/// Same check for a raw mapping table: table[x] is the image of x, and the
/// table must have 2^width entries.
bool permutation_check(std::span<const std::uint64_t> table, std::size_t width);

/// Exhaustive Hamming-weight preservation test.
bool is_conservative(const Circuit& c);
/// Sufficient structural test usable at any width: all gates are Fredkin.
bool is_conservative_by_construction(const Circuit& c);

/// Reads the text circuit format: `wires N` then one gate per line
/// (`x t`, `cx c t`, `ccx c1 c2 t`, `cswap c t1 t2`); `#` starts a comment.
Circuit parse_circuit(std::string_view text);
/// Canonical text form; parse_circuit(serialize(c)) == c.
std::string serialize(const Circuit& c);

class ParseError : public CircuitError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Deterministic in all arguments. Wires within a gate are drawn uniformly
/// without repetition.
Circuit random_circuit(std::size_t width, std::size_t gate_count, std::span<const GateKind> gate_set,
                       std::uint64_t seed);

}  // namespace revlab::circuit
