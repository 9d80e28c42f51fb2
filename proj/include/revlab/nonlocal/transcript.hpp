#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "revlab/core/bitstring.hpp"

namespace revlab::nonlocal {

class GameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Records of an n-round PR game: round i has inputs (a_i, b_i) and outputs
/// (x_i, y_i). The round is won iff x_i xor y_i == a_i and b_i.
class PRTranscript {
 public:
  PRTranscript(BitString a, BitString b, BitString x, BitString y, std::string strategy, std::uint64_t seed,
               std::string source);

  const BitString& a() const { return a_; }
  const BitString& b() const { return b_; }
  const BitString& x() const { return x_; }
  const BitString& y() const { return y_; }
  std::size_t rounds() const { return a_.size(); }
  const std::string& strategy() const { return strategy_; }
  std::uint64_t seed() const { return seed_; }
  const std::string& source() const { return source_; }

  std::size_t wins() const;
  double win_fraction() const;

  friend bool operator==(const PRTranscript&, const PRTranscript&) = default;

 private:
  BitString a_, b_, x_, y_;
  std::string strategy_;
  std::uint64_t seed_;
  std::string source_;
};

/// Whether setting b is allowed after setting a: b == a or b == a + 1 (mod m),
/// settings valued in {1..m}.
bool promise_holds(unsigned m, unsigned a, unsigned b);
/// 1 iff (a, b) == (m, 1).
inline bool chained_target(unsigned m, unsigned a, unsigned b) { return a == m && b == 1; }

/// Records of an n-round chained Bell game. Every round must satisfy the
/// promise; construction throws GameError otherwise.
class ChainedTranscript {
 public:
  ChainedTranscript(unsigned m, std::vector<unsigned> a, std::vector<unsigned> b, BitString x, BitString y,
                    std::string strategy, std::uint64_t seed, std::string source);

  unsigned m() const { return m_; }
  const std::vector<unsigned>& a() const { return a_; }
  const std::vector<unsigned>& b() const { return b_; }
  const BitString& x() const { return x_; }
  const BitString& y() const { return y_; }
  std::size_t rounds() const { return a_.size(); }
  const std::string& strategy() const { return strategy_; }
  std::uint64_t seed() const { return seed_; }
  const std::string& source() const { return source_; }

  /// chi_i = [a_i == m and b_i == 1].
  BitString chi() const;
  std::size_t violations() const;
  double error_fraction() const;

  friend bool operator==(const ChainedTranscript&, const ChainedTranscript&) = default;

 private:
  unsigned m_;
  std::vector<unsigned> a_, b_;
  BitString x_, y_;
  std::string strategy_;
  std::uint64_t seed_;
  std::string source_;
};

using Transcript = std::variant<PRTranscript, ChainedTranscript>;

/// CSV: a `# kind=pr|chained m=M strategy=S seed=N source=SRC` line, then
/// `round,a,b,x,y` and one row per round (settings in decimal).
void write_transcript(std::ostream& out, const Transcript& t);
Transcript read_transcript(std::istream& in);

}  // namespace revlab::nonlocal
