#pragma once

#include <string>

#include <json.hpp>

#include "revlab/complexity/compressor.hpp"
#include "revlab/nonlocal/transcript.hpp"

namespace revlab::nonlocal {

using complexity::Compressor;
using complexity::Message;

struct WitnessConfig {
  /// Slack on every normalized verdict threshold, as a fraction of n.
  double tol = 0.1;
  /// Allowed chained error fraction, in multiples of sin^2(pi / (4m)).
  double epsilon_factor = 3.0;
};

/// Chained settings as ceil(log2 m)-bit symbols holding v - 1.
Message encode_settings(unsigned m, const std::vector<unsigned>& settings);

struct NoSignalingReport {
  std::size_t rounds = 0;
  std::size_t khat_x_given_a = 0;
  std::size_t khat_x_given_ab = 0;
  long long gap = 0;
  double normalized_gap = 0.0;
  std::string compressor;

  nlohmann::json to_json() const;
};

/// gap = khat(x | a) - khat(x | a, b).
NoSignalingReport nosignaling_audit(const Transcript& t, const Compressor& comp);

enum class Verdict { Holds, Fails, NoClaim };
std::string to_string(Verdict v);

struct PRWitnessReport {
  std::size_t rounds = 0;
  std::string compressor;
  /// khat(a, b) / 2n, and whether it clears 1 - tol.
  double source_score = 0.0;
  bool source_ok = false;
  std::size_t khat_ab_given_b = 0;  // a and b, as a string, given b
  double half_rounds = 0.0;
  std::size_t khat_x_given_b = 0;
  std::size_t khat_y_given_b = 0;
  std::size_t khat_x_given_a = 0;
  std::size_t khat_x_given_ab = 0;
  std::size_t khat_x = 0;
  double threshold = 0.25;
  Verdict verdict = Verdict::NoClaim;

  nlohmann::json to_json() const;
};

/// Measures each step of the lower-bound chain "x and y given b explain
/// a.b given b, which is about n/2 for random inputs, so K(x) >= n/4".
/// Throws GameError unless every round is won.
PRWitnessReport pr_witness(const PRTranscript& t, const Compressor& comp, const WitnessConfig& cfg = {});

struct ChainedWitnessReport {
  std::size_t rounds = 0;
  unsigned m = 0;
  std::string compressor;
  double source_score = 0.0;  // khat(a, b) / ((log2 m + 1) n)
  bool source_ok = false;
  double error_fraction = 0.0;
  double error_threshold = 0.0;
  double chi_fraction = 0.0;
  std::size_t khat_chi_given_b = 0;
  double chi_ratio = 0.0;       // khat(chi | b) m / n, about 1
  double entropy_budget = 0.0;  // h(error) n
  /// c with error = c / m^2, and whether h(c / m^2) < 1 / (3m).
  double lemma_constant = 0.0;
  bool lemma_applicable = true;
  std::size_t khat_x = 0;
  std::size_t khat_x_given_b = 0;
  std::size_t khat_y_given_b = 0;
  std::size_t khat_x_given_ab = 0;
  std::size_t khat_y_given_ab = 0;
  /// khat(x | b) + khat(y | b) + h n  vs  khat(chi | b).
  double generation_lhs = 0.0;
  /// khat(y | b)  vs  2n / (3m) - khat(x).
  double y_lower_rhs = 0.0;
  /// khat(y | a, b)  vs  khat(x | a, b) + h n.
  double y_upper_rhs = 0.0;
  double threshold = 0.0;  // 1 / (6m)
  Verdict verdict = Verdict::NoClaim;

  nlohmann::json to_json() const;
};

/// Requires m to be a power of two and the error fraction to stay within
/// epsilon_factor * sin^2(pi / (4m)); throws GameError otherwise. The verdict
/// holds iff khat(x) / n >= 1 / (6m) - tol.
ChainedWitnessReport chained_witness(const ChainedTranscript& t, const Compressor& comp,
                                     const WitnessConfig& cfg = {});

}  // namespace revlab::nonlocal
