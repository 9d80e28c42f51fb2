#include "revlab/thermo/landauer.hpp"

#include "revlab/complexity/estimates.hpp"
#include "revlab/core/rng.hpp"

namespace revlab::thermo {

std::size_t erasure_cost_upper(const Message& s, const Message& x, std::span<const Compressor* const> comps) {
  return complexity::khat_cond_min(comps, s, x).bits;
}

std::size_t work_value_lower(const Message& s, const Message& x, std::span<const Compressor* const> comps) {
  const std::size_t ec = erasure_cost_upper(s, x, comps);
  const std::size_t n = s.bit_length();
  return ec < n ? n - ec : 0;
}

DualityReport duality_report(const Message& s, const Message& x, std::span<const Compressor* const> comps) {
  DualityReport r;
  r.length = s.bit_length();
  r.erasure_cost_ub = erasure_cost_upper(s, x, comps);
  r.clipped = r.erasure_cost_ub > r.length;
  r.work_value_lb = r.clipped ? 0 : r.length - r.erasure_cost_ub;
  r.sum = r.clipped ? r.length : r.work_value_lb + r.erasure_cost_ub;
  return r;
}

void Ledger::record(std::string action, long long work, const BitString& memory_after) {
  memory_ = memory_after;
  steps_.push_back({std::move(action), work, memory_.size(), memory_.hamming_weight()});
}

void Ledger::extract(std::string action, std::size_t units, const BitString& memory_after) {
  extracted_ += units;
  record(std::move(action), static_cast<long long>(units), memory_after);
}

void Ledger::pay(std::string action, std::size_t units, const BitString& memory_after) {
  paid_ += units;
  record(std::move(action), -static_cast<long long>(units), memory_after);
}

nlohmann::json Ledger::to_json() const {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : steps_) {
    steps.push_back({{"action", s.action}, {"work", s.work}, {"memory_bits", s.memory_bits},
                     {"memory_weight", s.memory_weight}});
  }
  return {{"extracted", extracted_}, {"paid", paid_},     {"net", net()},
          {"steps", steps},          {"seed", seed_},     {"compressor", compressor_}};
}

Ledger demon_cycle(const BitString& s, const Compressor& comp, std::uint64_t seed) {
  Ledger ledger(std::string(comp.name()), seed);
  const std::size_t n = s.size();
  ledger.extract("load", 0, s);

  const BitString c = comp.compress(s);
  const std::size_t freed = c.size() < n ? n - c.size() : 0;
  BitString memory = c + BitString(freed);
  ledger.extract("compress", 0, memory);

  Rng rng(seed);
  memory = c + rng.bits(freed);
  ledger.extract("extract", freed, memory);

  BitString cleared = BitString(c.size()) + memory.slice(c.size(), memory.size());
  ledger.pay("erase-record", c.size(), cleared);
  ledger.pay("erase-randomized", freed, BitString(memory.size()));
  return ledger;
}

}  // namespace revlab::thermo
