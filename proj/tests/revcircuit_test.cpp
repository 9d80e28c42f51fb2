#include <gtest/gtest.h>

#include <set>

#include "revlab/core/rng.hpp"
#include "revlab/revcircuit/bennett.hpp"
#include "revlab/revcircuit/circuit.hpp"

using namespace revlab;
using namespace revlab::circuit;

namespace {

const GateKind kAllKinds[] = {GateKind::Not, GateKind::Cnot, GateKind::Toffoli, GateKind::Fredkin};

BitString bits(const char* s) { return BitString::from_string(s); }

// Reference semantics written directly from the gate definitions, over a
// plain vector so it shares nothing with Gate::apply.
std::vector<int> reference_eval(const Circuit& c, std::vector<int> v) {
  for (const Gate& g : c.gates()) {
    const auto w = g.wires();
    switch (g.kind()) {
      case GateKind::Not:
        v[w[0]] ^= 1;
        break;
      case GateKind::Cnot:
        v[w[1]] ^= v[w[0]];
        break;
      case GateKind::Toffoli:
        v[w[2]] ^= v[w[0]] & v[w[1]];
        break;
      case GateKind::Fredkin:
        if (v[w[0]]) std::swap(v[w[1]], v[w[2]]);
        break;
    }
  }
  return v;
}

}  // namespace

TEST(gate, arities_and_validation) {
  EXPECT_EQ(arity(GateKind::Not), 1u);
  EXPECT_EQ(arity(GateKind::Cnot), 2u);
  EXPECT_EQ(control_count(GateKind::Toffoli), 2u);
  EXPECT_EQ(target_count(GateKind::Fredkin), 2u);
  EXPECT_THROW(Gate::cx(1, 1), CircuitError);
  EXPECT_THROW(Gate::ccx(0, 2, 2), CircuitError);
  EXPECT_THROW(Gate::cswap(3, 1, 3), CircuitError);
  EXPECT_THROW(Circuit(2, {Gate::ccx(0, 1, 2)}), CircuitError);
}

TEST(gate, canonical_wire_order) {
  EXPECT_EQ(Gate::ccx(1, 0, 2), Gate::ccx(0, 1, 2));
  EXPECT_EQ(Gate::cswap(0, 2, 1), Gate::cswap(0, 1, 2));
}

TEST(eval, truth_tables) {
  EXPECT_EQ(Circuit::identity(4).eval(bits("1011")), bits("1011"));
  EXPECT_EQ(Circuit(3, {Gate::ccx(0, 1, 2)}).eval(bits("110")), bits("111"));
  EXPECT_EQ(Circuit(3, {Gate::cswap(0, 1, 2)}).eval(bits("110")), bits("101"));
  EXPECT_EQ(Circuit(3, {Gate::cswap(0, 1, 2)}).eval(bits("010")), bits("010"));
  EXPECT_EQ(Circuit(2, {Gate::cx(0, 1)}).eval(bits("10")), bits("11"));
  EXPECT_THROW(Circuit(3).eval(bits("11")), CircuitError);
}

TEST(eval, word_path_matches_bit_path) {
  const Circuit c = random_circuit(10, 40, kAllKinds, 11);
  for (std::uint64_t x = 0; x < 1024; ++x) {
    EXPECT_EQ(c.eval(x), c.eval(BitString::from_word(x, 10)).to_word());
  }
}

TEST(eval, matches_reference_semantics) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Circuit c = random_circuit(7, 30, kAllKinds, seed);
    for (std::uint64_t x = 0; x < 128; ++x) {
      const BitString in = BitString::from_word(x, 7);
      std::vector<int> v(7);
      for (std::size_t i = 0; i < 7; ++i) v[i] = in[i];
      const auto ref = reference_eval(c, v);
      const BitString out = c.eval(in);
      for (std::size_t i = 0; i < 7; ++i) ASSERT_EQ(out[i], ref[i] == 1);
    }
  }
}

TEST(parse, examples) {
  const Circuit c = parse_circuit("wires 3\nccx 0 1 2");
  EXPECT_EQ(c, Circuit(3, {Gate::ccx(0, 1, 2)}));
  EXPECT_EQ(parse_circuit("wires 2"), Circuit::identity(2));
  EXPECT_EQ(parse_circuit("# header comment\nwires 3   # trailing\n\nx 2\ncswap 0 2 1\n"),
            Circuit(3, {Gate::x(2), Gate::cswap(0, 1, 2)}));
}

TEST(parse, errors_carry_positions) {
  try {
    parse_circuit("wires 2\nccx 0 1 5");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 9u);
  }
  EXPECT_THROW(parse_circuit("ccx 0 1 2"), ParseError);
  EXPECT_THROW(parse_circuit(""), ParseError);
  EXPECT_THROW(parse_circuit("wires 3\nfoo 1"), ParseError);
  EXPECT_THROW(parse_circuit("wires 3\ncx 1"), ParseError);
  EXPECT_THROW(parse_circuit("wires 3\ncx 1 1"), ParseError);
  EXPECT_THROW(parse_circuit("wires 3\nx -1"), ParseError);
  EXPECT_THROW(parse_circuit("wires 3\nwires 3"), ParseError);
}

TEST(parse, serialize_is_canonical) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Circuit c = random_circuit(9, 25, kAllKinds, seed);
    const std::string text = serialize(c);
    EXPECT_EQ(parse_circuit(text), c);
    EXPECT_EQ(serialize(parse_circuit(text)), text);
  }
  EXPECT_EQ(serialize(parse_circuit("wires 3\nccx 1 0 2\ncswap 0 2 1")), "wires 3\nccx 0 1 2\ncswap 0 1 2\n");
}

TEST(invert, examples) {
  EXPECT_EQ(invert(Circuit::identity(3)), Circuit::identity(3));
  const Circuit t(3, {Gate::ccx(0, 1, 2)});
  EXPECT_EQ(invert(t), t);
  const Circuit abc(3, {Gate::x(0), Gate::cx(0, 1), Gate::cswap(2, 0, 1)});
  EXPECT_EQ(invert(abc), Circuit(3, {Gate::cswap(2, 0, 1), Gate::cx(0, 1), Gate::x(0)}));
}

TEST(invert, involution_and_round_trip) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Circuit c = random_circuit(12, 64, kAllKinds, seed);
    const Circuit inv = invert(c);
    EXPECT_EQ(invert(inv), c);
    for (std::uint64_t x = 0; x < 4096; ++x) ASSERT_EQ(inv.eval(c.eval(x)), x);
  }
}

TEST(invert, sampled_round_trip_at_width_48) {
  const Circuit c = random_circuit(48, 200, kAllKinds, 77);
  const Circuit inv = invert(c);
  Rng rng(4);
  for (int t = 0; t < 500; ++t) {
    const BitString x = rng.bits(48);
    EXPECT_EQ(inv.eval(c.eval(x)), x);
  }
}

TEST(reconstruct, state_zero_from_any_step) {
  const Circuit c = random_circuit(8, 30, kAllKinds, 9);
  for (std::uint64_t x = 0; x < 256; ++x) {
    const BitString in = BitString::from_word(x, 8);
    for (std::size_t t = 0; t <= c.size(); ++t) {
      ASSERT_EQ(reconstruct_initial(c, c.prefix(t).eval(in), t), in);
    }
  }
  EXPECT_THROW(c.prefix(31), CircuitError);
}

TEST(permutation_check, examples) {
  EXPECT_TRUE(permutation_check(random_circuit(6, 20, kAllKinds, 1)));
  const std::uint64_t collision[] = {0b00, 0b00, 0b10, 0b11};
  EXPECT_FALSE(permutation_check(collision, 2));
  const std::uint64_t identity3[] = {0, 1, 2, 3, 4, 5, 6, 7};
  EXPECT_TRUE(permutation_check(identity3, 3));
  const std::uint64_t out_of_range[] = {0, 4};
  EXPECT_FALSE(permutation_check(out_of_range, 1));
  EXPECT_THROW(permutation_check(identity3, 2), CircuitError);
  EXPECT_THROW(permutation_check(Circuit::identity(21)), CircuitError);
}

TEST(permutation_check, every_random_circuit_is_bijective) {
  Rng rng(123);
  for (int t = 0; t < 100; ++t) {
    const auto width = 3 + rng.below(10);
    const Circuit c = random_circuit(width, rng.below(65), kAllKinds, rng.next());
    ASSERT_TRUE(permutation_check(c));
  }
}

TEST(conservative, examples) {
  const GateKind fredkin[] = {GateKind::Fredkin};
  EXPECT_TRUE(is_conservative(random_circuit(10, 50, fredkin, 3)));
  EXPECT_TRUE(is_conservative_by_construction(random_circuit(10, 50, fredkin, 3)));
  EXPECT_FALSE(is_conservative(Circuit(2, {Gate::x(0)})));
  EXPECT_FALSE(is_conservative(Circuit(2, {Gate::cx(0, 1)})));
  EXPECT_TRUE(is_conservative(Circuit::identity(5)));
  EXPECT_THROW(is_conservative(Circuit::identity(21)), CircuitError);
}

TEST(random_circuit, contract) {
  EXPECT_EQ(random_circuit(5, 0, kAllKinds, 1), Circuit::identity(5));
  EXPECT_EQ(random_circuit(8, 40, kAllKinds, 99), random_circuit(8, 40, kAllKinds, 99));
  EXPECT_NE(random_circuit(8, 40, kAllKinds, 99), random_circuit(8, 40, kAllKinds, 100));
  EXPECT_THROW(random_circuit(2, 1, kAllKinds, 1), CircuitError);
  EXPECT_THROW(random_circuit(5, 1, std::span<const GateKind>{}, 1), CircuitError);
  const GateKind only_x[] = {GateKind::Not};
  EXPECT_NO_THROW(random_circuit(1, 4, only_x, 1));
}

TEST(random_circuit, uses_every_kind_and_wire) {
  const Circuit c = random_circuit(6, 2000, kAllKinds, 5);
  std::set<GateKind> kinds;
  std::vector<int> used(6);
  for (const Gate& g : c.gates()) {
    kinds.insert(g.kind());
    for (auto w : g.wires()) ++used[w];
  }
  EXPECT_EQ(kinds.size(), 4u);
  for (int u : used) EXPECT_GT(u, 200);
}

TEST(bennett, and_xor_or) {
  const TruthTable and_f{2, 1, {0, 0, 0, 1}};
  const TruthTable xor_f{2, 1, {0, 1, 1, 0}};
  const TruthTable or_f{2, 1, {0, 1, 1, 1}};
  const auto a = bennett_compile(and_f);
  EXPECT_EQ(a.ancillae, 0u);
  EXPECT_EQ(a.circuit, Circuit(3, {Gate::ccx(0, 1, 2)}));
  const auto x = bennett_compile(xor_f);
  EXPECT_EQ(x.ancillae, 0u);
  EXPECT_EQ(x.circuit, Circuit(3, {Gate::cx(1, 2), Gate::cx(0, 2)}));
  const auto o = bennett_compile(or_f);
  for (std::uint64_t r = 0; r < 4; ++r) {
    const BitString in = or_f.input_bits(r);
    const bool expect = in[0] || in[1];
    const BitString state = o.run(in);
    EXPECT_EQ(state, in + BitString(1, expect) + BitString(o.ancillae));
  }
}

TEST(bennett, every_function_up_to_three_inputs) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const std::uint64_t rows = std::uint64_t{1} << n;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << rows); ++code) {
      TruthTable f{n, 1, {}};
      for (std::uint64_t r = 0; r < rows; ++r) f.rows.push_back((code >> r) & 1);
      const auto c = bennett_compile(f);
      for (std::uint64_t r = 0; r < rows; ++r) {
        ASSERT_EQ(c.run(f.input_bits(r)), f.input_bits(r) + f.output_bits(r) + BitString(c.ancillae));
      }
    }
  }
}

TEST(bennett, multi_output_and_high_degree) {
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    TruthTable f{5, 3, {}};
    for (int r = 0; r < 32; ++r) f.rows.push_back(rng.below(8));
    const auto c = bennett_compile(f);
    EXPECT_LE(c.ancillae, 3u);
    for (std::uint64_t r = 0; r < 32; ++r) {
      ASSERT_EQ(c.run(f.input_bits(r)), f.input_bits(r) + f.output_bits(r) + BitString(c.ancillae));
    }
  }
  const TruthTable and5{5, 1, std::vector<std::uint64_t>(32, 0)};
  TruthTable top = and5;
  top.rows[31] = 1;
  EXPECT_EQ(bennett_compile(top).ancillae, 3u);
}

TEST(bennett, table_validation) {
  EXPECT_THROW(bennett_compile(TruthTable{2, 1, {}}), CircuitError);
  EXPECT_THROW(bennett_compile(TruthTable{2, 1, {0, 1, 1}}), CircuitError);
  EXPECT_THROW(bennett_compile(TruthTable{1, 1, {0, 2}}), CircuitError);
  EXPECT_THROW(bennett_compile(TruthTable{1, 0, {0, 0}}), CircuitError);
  const auto c = bennett_compile(TruthTable{0, 2, {0b10}});
  EXPECT_EQ(c.run(BitString()), BitString::from_string("10"));
}
