#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "revlab/combinatorics/rational.hpp"
#include "revlab/core/rng.hpp"
#include "revlab/nonlocal/transcript.hpp"

namespace revlab::nonlocal {

/// Perfect PR box: x uniform, y = x xor (a and b).
struct PROracle {};

/// Local deterministic PR strategy acting on blocks of `block` rounds.
/// f and g have 2^block entries; bit j of a block word is round j of the
/// block, for inputs and outputs alike.
struct LocalDeterministic {
  std::size_t block = 1;
  std::vector<std::uint64_t> f;
  std::vector<std::uint64_t> g;

  static LocalDeterministic random(std::size_t block, Rng& rng);
};

/// Communicating PR strategy: x = a and b, y = 0. Wins every round while
/// making x depend on b; the positive control for the no-signaling audit.
struct Signaling {};

/// Singlet statistics for the chained game: measurement angles
/// theta_A(a) = a pi / m and theta_B(b) = (b - 1/2) pi / m, outputs differing
/// with probability sin^2((theta_A - theta_B) / 2).
struct ChainedQuantum {
  unsigned m = 2;
};

/// x = x_table[a - 1], y = y_table[b - 1].
struct ChainedDeterministic {
  unsigned m = 2;
  std::vector<bool> x_table;
  std::vector<bool> y_table;
};

using Strategy = std::variant<LocalDeterministic, PROracle, Signaling, ChainedQuantum, ChainedDeterministic>;

std::string strategy_tag(const Strategy& s);

/// One PR round. Throws GameError for chained strategies or block != 1.
std::pair<bool, bool> pr_play(const Strategy& s, bool a, bool b, Rng& rng);

/// #{(a, b) in ({0,1}^n)^2 : f(a) xor g(b) == a and b}. Requires n <= 3 and
/// tables of 2^n entries each below 2^n.
BigInt pr_count_satisfying(std::span<const std::uint64_t> f, std::span<const std::uint64_t> g, std::size_t n);

/// Exact value of the n-fold parallel PR game over deterministic strategies.
/// n <= 2.
ExactRational pr_value_bruteforce(std::size_t n);

/// One chained round; throws GameError on a promise violation or a PR strategy.
std::pair<bool, bool> chained_play(unsigned m, const Strategy& s, unsigned a, unsigned b, Rng& rng);

/// Per-pair failure probability of ChainedQuantum: sin^2(pi / (4m)).
double chained_quantum_error(unsigned m);

struct ChainedValue {
  ExactRational value;
  ExactRational error;
};

/// Best satisfied fraction of the 2m promise constraints over deterministic
/// assignments, by exhaustion of all 2^(2m) pairs. 2 <= m <= 12.
ChainedValue chained_classical_value(unsigned m);

/// Where game inputs come from. File bytes are consumed MSB-first.
struct InputSource {
  enum class Kind { Prng, File } kind = Kind::Prng;
  std::string path;

  static InputSource parse(const std::string& spec);  // "prng" or "file:PATH"
  std::string tag() const;
};

/// n PR rounds. Inputs use a stream derived from `seed` (or the file);
/// outputs use a second derived stream.
PRTranscript run_pr_game(std::size_t n, const Strategy& s, const InputSource& src, std::uint64_t seed);

/// n chained rounds with inputs uniform over the 2m promise pairs. A file
/// source requires m to be a power of two and supplies log2(m) + 1 bits per
/// round.
ChainedTranscript run_chained_game(std::size_t n, unsigned m, const Strategy& s, const InputSource& src,
                                   std::uint64_t seed);

enum class GameKind { Pr, Chained };
GameKind parse_game_kind(const std::string& name);

Transcript run_game(GameKind kind, std::size_t n, unsigned m, const Strategy& s, const InputSource& src,
                    std::uint64_t seed);

}  // namespace revlab::nonlocal
