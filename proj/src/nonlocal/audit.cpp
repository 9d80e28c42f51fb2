#include "revlab/nonlocal/audit.hpp"

#include <bit>
#include <cmath>
#include <tuple>
#include <variant>

#include "revlab/combinatorics/bounds.hpp"
#include "revlab/complexity/estimates.hpp"
#include "revlab/nonlocal/games.hpp"

namespace revlab::nonlocal {

using complexity::khat;
using complexity::khat_cond;

namespace {

unsigned setting_width(unsigned m) { return std::bit_width(m - 1); }

double per_round(std::size_t bits, std::size_t n) {
  return n == 0 ? 0.0 : static_cast<double>(bits) / static_cast<double>(n);
}

}  // namespace

Message encode_settings(unsigned m, const std::vector<unsigned>& settings) {
  const unsigned w = setting_width(m);
  BitString bits;
  bits.reserve(settings.size() * w);
  for (unsigned v : settings) {
    if (v < 1 || v > m) throw GameError("setting out of range 1..m");
    for (unsigned j = w; j-- > 0;) bits.push_back(((v - 1) >> j) & 1);
  }
  return Message::symbols(std::move(bits), w);
}

nlohmann::json NoSignalingReport::to_json() const {
  return {{"rounds", rounds},
          {"khat_x_given_a", khat_x_given_a},
          {"khat_x_given_ab", khat_x_given_ab},
          {"gap", gap},
          {"normalized_gap", normalized_gap},
          {"compressor", compressor}};
}

NoSignalingReport nosignaling_audit(const Transcript& t, const Compressor& comp) {
  const auto [a, b, x, n] = std::visit(
      [](const auto& tr) {
        using T = std::decay_t<decltype(tr)>;
        if constexpr (std::is_same_v<T, PRTranscript>) {
          return std::tuple{Message(tr.a()), Message(tr.b()), Message(tr.x()), tr.rounds()};
        } else {
          return std::tuple{encode_settings(tr.m(), tr.a()), encode_settings(tr.m(), tr.b()), Message(tr.x()),
                            tr.rounds()};
        }
      },
      t);
  NoSignalingReport r;
  r.rounds = n;
  r.compressor = std::string(comp.name());
  r.khat_x_given_a = khat_cond(comp, x, a).bits;
  r.khat_x_given_ab = khat_cond(comp, x, join(a, b)).bits;
  r.gap = static_cast<long long>(r.khat_x_given_a) - static_cast<long long>(r.khat_x_given_ab);
  r.normalized_gap = n == 0 ? 0.0 : static_cast<double>(r.gap) / static_cast<double>(n);
  return r;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    case Verdict::NoClaim:
      break;
  }
  return "no-claim";
}

nlohmann::json PRWitnessReport::to_json() const {
  return {{"rounds", rounds},
          {"compressor", compressor},
          {"source_score", source_score},
          {"source_ok", source_ok},
          {"khat_ab_given_b", khat_ab_given_b},
          {"half_rounds", half_rounds},
          {"khat_x_given_b", khat_x_given_b},
          {"khat_y_given_b", khat_y_given_b},
          {"khat_x_given_a", khat_x_given_a},
          {"khat_x_given_ab", khat_x_given_ab},
          {"khat_x", khat_x},
          {"threshold", threshold},
          {"verdict", to_string(verdict)}};
}

PRWitnessReport pr_witness(const PRTranscript& t, const Compressor& comp, const WitnessConfig& cfg) {
  if (t.wins() != t.rounds()) {
    throw GameError("premise violated: " + std::to_string(t.rounds() - t.wins()) + " of " +
                    std::to_string(t.rounds()) + " rounds lost");
  }
  const std::size_t n = t.rounds();
  const Message a(t.a()), b(t.b()), x(t.x()), y(t.y());
  const Message ab(bit_and(t.a(), t.b()));

  PRWitnessReport r;
  r.rounds = n;
  r.compressor = std::string(comp.name());
  r.source_score = per_round(khat(comp, join(a, b)).bits, 2 * n);
  r.source_ok = n > 0 && r.source_score >= 1.0 - cfg.tol;
  r.khat_ab_given_b = khat_cond(comp, ab, b).bits;
  r.half_rounds = static_cast<double>(n) / 2.0;
  r.khat_x_given_b = khat_cond(comp, x, b).bits;
  r.khat_y_given_b = khat_cond(comp, y, b).bits;
  r.khat_x_given_a = khat_cond(comp, x, a).bits;
  r.khat_x_given_ab = khat_cond(comp, x, join(a, b)).bits;
  r.khat_x = khat(comp, x).bits;
  if (!r.source_ok) {
    r.verdict = Verdict::NoClaim;
  } else {
    r.verdict = per_round(r.khat_x, n) >= r.threshold - cfg.tol ? Verdict::Holds : Verdict::Fails;
  }
  return r;
}

nlohmann::json ChainedWitnessReport::to_json() const {
  return {{"rounds", rounds},
          {"m", m},
          {"compressor", compressor},
          {"source_score", source_score},
          {"source_ok", source_ok},
          {"error_fraction", error_fraction},
          {"error_threshold", error_threshold},
          {"chi_fraction", chi_fraction},
          {"khat_chi_given_b", khat_chi_given_b},
          {"chi_ratio", chi_ratio},
          {"entropy_budget", entropy_budget},
          {"lemma_constant", lemma_constant},
          {"lemma_applicable", lemma_applicable},
          {"khat_x", khat_x},
          {"khat_x_given_b", khat_x_given_b},
          {"khat_y_given_b", khat_y_given_b},
          {"khat_x_given_ab", khat_x_given_ab},
          {"khat_y_given_ab", khat_y_given_ab},
          {"generation_lhs", generation_lhs},
          {"y_lower_rhs", y_lower_rhs},
          {"y_upper_rhs", y_upper_rhs},
          {"threshold", threshold},
          {"verdict", to_string(verdict)}};
}

ChainedWitnessReport chained_witness(const ChainedTranscript& t, const Compressor& comp, const WitnessConfig& cfg) {
  const unsigned m = t.m();
  if (!std::has_single_bit(m)) throw GameError("chained witness needs m to be a power of two");
  ChainedWitnessReport r;
  r.rounds = t.rounds();
  r.m = m;
  r.compressor = std::string(comp.name());
  r.error_fraction = t.error_fraction();
  r.error_threshold = cfg.epsilon_factor * chained_quantum_error(m);
  if (r.error_fraction > r.error_threshold) {
    throw GameError("error fraction " + std::to_string(r.error_fraction) + " exceeds threshold " +
                    std::to_string(r.error_threshold));
  }

  const std::size_t n = t.rounds();
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  const Message a = encode_settings(m, t.a()), b = encode_settings(m, t.b());
  const Message x(t.x()), y(t.y());
  const BitString chi = t.chi();

  r.source_score = per_round(khat(comp, join(a, b)).bits, n * (setting_width(m) + 1));
  r.source_ok = n > 0 && r.source_score >= 1.0 - cfg.tol;
  r.chi_fraction = per_round(chi.hamming_weight(), n);
  r.khat_chi_given_b = khat_cond(comp, Message(chi), b).bits;
  r.chi_ratio = per_round(r.khat_chi_given_b, n) * md;
  const double h = combinatorics::binary_entropy(r.error_fraction);
  r.entropy_budget = h * nd;
  r.lemma_constant = r.error_fraction * md * md;
  r.lemma_applicable = r.lemma_constant == 0.0 || combinatorics::entropy_gap_holds(m, r.lemma_constant);

  r.khat_x = khat(comp, x).bits;
  r.khat_x_given_b = khat_cond(comp, x, b).bits;
  r.khat_y_given_b = khat_cond(comp, y, b).bits;
  r.khat_x_given_ab = khat_cond(comp, x, join(a, b)).bits;
  r.khat_y_given_ab = khat_cond(comp, y, join(a, b)).bits;
  r.generation_lhs = static_cast<double>(r.khat_x_given_b + r.khat_y_given_b) + r.entropy_budget;
  r.y_lower_rhs = 2.0 * nd / (3.0 * md) - static_cast<double>(r.khat_x);
  r.y_upper_rhs = static_cast<double>(r.khat_x_given_ab) + r.entropy_budget;
  r.threshold = 1.0 / (6.0 * md);
  if (!r.source_ok) {
    r.verdict = Verdict::NoClaim;
  } else {
    r.verdict = per_round(r.khat_x, n) >= r.threshold - cfg.tol ? Verdict::Holds : Verdict::Fails;
  }
  return r;
}

}  // namespace revlab::nonlocal
