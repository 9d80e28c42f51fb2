#include <fstream>
#include <sstream>

#include "revlab/revcircuit/bennett.hpp"
#include "revlab/revcircuit/circuit.hpp"
#include "session.hpp"

namespace revlab::cli {

namespace {

using circuit::Circuit;
using circuit::GateKind;

Circuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open circuit file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return circuit::parse_circuit(text.str());
}

std::vector<GateKind> parse_gate_set(const std::vector<std::string>& names) {
  std::vector<GateKind> kinds;
  for (const auto& name : names) {
    bool found = false;
    for (GateKind k : {GateKind::Not, GateKind::Cnot, GateKind::Toffoli, GateKind::Fredkin}) {
      if (circuit::mnemonic(k) == name) {
        kinds.push_back(k);
        found = true;
      }
    }
    if (!found) throw CLI::ValidationError("--gate-set", "unknown gate '" + name + "' (x, cx, ccx, cswap)");
  }
  return kinds;
}

std::string table_csv(const Circuit& c) {
  std::ostringstream os;
  os << "input,output\n";
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << c.width()); ++x) {
    const BitString in = BitString::from_word(x, c.width());
    os << in.to_string() << ',' << c.eval(in).to_string() << '\n';
  }
  return os.str();
}

}  // namespace

void add_circuit_commands(CLI::App& app, Session& s) {
  auto* group = app.add_subcommand("circuit", "Reversible circuit simulation and compilation");
  group->require_subcommand(1);

  {
    auto* sub = group->add_subcommand("run", "Evaluate a circuit file on one input or on all inputs");
    auto path = std::make_shared<std::string>();
    auto input = std::make_shared<std::string>();
    auto steps = std::make_shared<std::size_t>(SIZE_MAX);
    sub->add_option("--circuit", *path, "Circuit text file")->required();
    sub->add_option("--input", *input, "Input bits (wire 0 first); omit for the full table");
    sub->add_option("--steps", *steps, "Apply only the first STEPS gates");
    add_common(*sub, s.common);
    sub->callback([&s, sub, path, input, steps] {
      Run run(s, *sub);
      Circuit c = load_circuit(*path);
      if (*steps != SIZE_MAX) c = c.prefix(*steps);
      run.out() << "width: " << c.width() << "\ngates: " << c.gates().size() << '\n';
      if (!input->empty()) {
        const BitString out = c.eval(BitString::from_string(*input));
        run.out() << "output: " << out.to_string() << '\n';
        run.write("output.txt", out.to_string() + "\n");
      } else {
        if (c.width() > circuit::kMaxExhaustiveWidth) {
          throw std::invalid_argument("full table needs width <= " + std::to_string(circuit::kMaxExhaustiveWidth));
        }
        run.out() << "bijective: " << (circuit::permutation_check(c) ? "yes" : "no") << '\n';
        run.out() << "conservative: " << (circuit::is_conservative(c) ? "yes" : "no") << '\n';
        run.write("table.csv", table_csv(c));
      }
      run.finish();
    });
  }

  {
    auto* sub = group->add_subcommand("random", "Generate a random circuit");
    auto width = std::make_shared<std::size_t>(8);
    auto gates = std::make_shared<std::size_t>(32);
    auto set = std::make_shared<std::vector<std::string>>(std::vector<std::string>{"x", "cx", "ccx", "cswap"});
    sub->add_option("--width", *width, "Number of wires");
    sub->add_option("--gates", *gates, "Number of gates");
    sub->add_option("--gate-set", *set, "Comma-separated gate kinds")->delimiter(',');
    add_common(*sub, s.common);
    sub->callback([&s, sub, width, gates, set] {
      Run run(s, *sub);
      const auto kinds = parse_gate_set(*set);
      const Circuit c = circuit::random_circuit(*width, *gates, kinds, run.seed());
      const std::string text = circuit::serialize(c);
      run.out() << text;
      run.write("circuit.txt", text);
      run.finish();
    });
  }

  {
    auto* sub = group->add_subcommand("invert", "Print the inverse circuit and check the round trip");
    auto path = std::make_shared<std::string>();
    sub->add_option("--circuit", *path, "Circuit text file")->required();
    add_common(*sub, s.common);
    sub->callback([&s, sub, path] {
      Run run(s, *sub);
      const Circuit c = load_circuit(*path);
      const Circuit inv = circuit::invert(c);
      const std::string text = circuit::serialize(inv);
      run.out() << text;
      if (c.width() <= circuit::kMaxExhaustiveWidth) {
        const Circuit both = c.then(inv);
        bool ok = true;
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << c.width()) && ok; ++x) ok = both.eval(x) == x;
        run.out() << "round-trip: " << (ok ? "ok" : "FAILED") << '\n';
      }
      run.write("inverse.txt", text);
      run.finish();
    });
  }

  {
    auto* sub = group->add_subcommand("bennett", "Compile a truth table with compute-copy-uncompute");
    auto inputs = std::make_shared<std::size_t>(2);
    auto outputs = std::make_shared<std::size_t>(1);
    auto rows = std::make_shared<std::vector<std::uint64_t>>();
    sub->add_option("--inputs", *inputs, "Input bits n");
    sub->add_option("--outputs", *outputs, "Output bits m");
    sub->add_option("--rows", *rows, "2^n comma-separated output words, row r = input numeral r")
        ->delimiter(',')
        ->required();
    add_common(*sub, s.common);
    sub->callback([&s, sub, inputs, outputs, rows] {
      Run run(s, *sub);
      const circuit::TruthTable f{*inputs, *outputs, *rows};
      const auto compiled = circuit::bennett_compile(f);
      bool ok = true;
      for (std::uint64_t r = 0; r < f.rows.size(); ++r) {
        const BitString state = compiled.run(f.input_bits(r));
        const BitString expect = f.input_bits(r) + f.output_bits(r) + BitString(compiled.ancillae);
        ok = ok && state == expect;
      }
      const std::string text = circuit::serialize(compiled.circuit);
      run.out() << "ancillae: " << compiled.ancillae << "\ngates: " << compiled.circuit.gates().size()
                << "\nverified: " << (ok ? "yes" : "NO") << '\n'
                << text;
      run.write("circuit.txt", text);
      run.finish();
      if (!ok) throw std::runtime_error("compiled circuit does not reproduce the table");
    });
  }
}

}  // namespace revlab::cli
