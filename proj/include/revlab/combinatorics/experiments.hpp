#pragma once

#include <cstdint>
#include <map>
#include <ostream>

#include "revlab/combinatorics/rational.hpp"
#include "revlab/revcircuit/circuit.hpp"

namespace revlab::combinatorics {

/// Hamming weights of the two halves of a 2n-bit string; left is wires [0, n).
struct WeightCouple {
  std::size_t left_weight = 0;
  std::size_t right_weight = 0;
  std::size_t half_length = 0;

  static WeightCouple of(const BitString& s);
  static WeightCouple of(std::uint64_t word, std::size_t half_length);
  /// Number of strings with this couple: C(n, left) C(n, right).
  BigInt size() const;

  friend auto operator<=>(const WeightCouple&, const WeightCouple&) = default;
};

struct TransitionHistogram {
  WeightCouple source;
  std::uint64_t trials = 0;
  std::map<WeightCouple, std::uint64_t> counts;

  double frequency(const WeightCouple& c) const;
  /// Fraction of outputs whose heavy (left) half got strictly heavier.
  double frequency_more_imbalanced() const;
  /// CSV with header left_weight,right_weight,count,frequency.
  void write_csv(std::ostream& out) const;
};

/// Source couple [wn, (1-w)n] with n = width / 2. Throws std::domain_error
/// if width is odd or wn is not integral.
WeightCouple source_couple(std::size_t width, const ExactRational& w);

/// Samples `trials` uniform inputs with the source couple, evaluates the
/// circuit and bins output couples. Trials are split into fixed-size chunks,
/// each with its own derived seed, so the result does not depend on the
/// number of worker threads. The circuit must be conservative (certified
/// structurally, or exhaustively when width <= 20).
TransitionHistogram empirical_transition_histogram(const circuit::Circuit& c, const ExactRational& w,
                                                   std::uint64_t trials, std::uint64_t seed,
                                                   unsigned threads = 0);

/// Exact image counts of every input of the source couple. Width <= 20.
std::map<WeightCouple, std::uint64_t> exhaustive_transition_counts(const circuit::Circuit& c,
                                                                    const WeightCouple& source);

/// Number of weight-w inputs whose image has wires [0, n) all set and
/// weight w - n on the rest. Width <= 20.
std::uint64_t concentration_count(const circuit::Circuit& c, std::size_t weight, std::size_t n);

}  // namespace revlab::combinatorics
