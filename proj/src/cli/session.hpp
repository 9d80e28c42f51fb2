#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "revlab/combinatorics/rational.hpp"
#include "revlab/complexity/compressor.hpp"
#include "revlab/core/bitstring.hpp"

namespace revlab::cli {

/// Options every leaf command accepts.
struct Common {
  std::uint64_t seed = 1;
  std::string out_dir;
  unsigned threads = 0;
};

struct Session {
  std::ostream& out;
  std::ostream& err;
  Common common;
};

/// Registers --seed, --out and --threads on a leaf command.
void add_common(CLI::App& sub, Common& common);

/// State of one command invocation: writes artifacts under --out and closes
/// with manifest.json echoing the effective configuration.
class Run {
 public:
  Run(Session& session, const CLI::App& sub);

  std::ostream& out() { return session_.out; }
  std::uint64_t seed() const { return session_.common.seed; }
  unsigned threads() const { return session_.common.threads; }
  bool has_out() const { return !session_.common.out_dir.empty(); }

  /// No-ops without --out.
  void write(const std::string& name, const std::string& content);
  void write_json(const std::string& name, const nlohmann::json& j);
  /// Two-column plot file with header x,y.
  void write_curve(const std::string& name, const std::vector<std::pair<double, double>>& points);

  void finish();

 private:
  Session& session_;
  std::string command_;
  nlohmann::json config_;
  std::vector<std::string> outputs_;
};

/// Throws CLI::ValidationError naming the option on malformed input.
ExactRational parse_rational_option(const std::string& option, const std::string& text);

/// Bit-string specs: a literal 0/1 string, "" for empty, zeros:N, ones:N,
/// prng:N, repeat:PATTERN:N, or file:PATH (raw bytes, MSB first). prng
/// strings draw from mix_seed(seed, stream).
BitString parse_bits(const std::string& spec, std::uint64_t seed, std::uint64_t stream);

/// Compressor names in order; "all" expands to the built-ins.
std::vector<const complexity::Compressor*> select_compressors(const std::vector<std::string>& names);

void add_circuit_commands(CLI::App& app, Session& s);
void add_secondlaw_commands(CLI::App& app, Session& s);
void add_thermo_commands(CLI::App& app, Session& s);
void add_complexity_commands(CLI::App& app, Session& s);
void add_bell_commands(CLI::App& app, Session& s);

}  // namespace revlab::cli
