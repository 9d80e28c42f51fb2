#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "revlab/complexity/compressor.hpp"

namespace revlab::thermo {

using complexity::Compressor;
using complexity::Message;

// All quantities are in bit-units, where one unit is kT ln 2.

/// Best computable upper bound on the erasure cost of s given catalyst x:
/// min over comps of khat(s | x).
std::size_t erasure_cost_upper(const Message& s, const Message& x, std::span<const Compressor* const> comps);

/// len(s) - erasure_cost_upper, clipped at 0.
std::size_t work_value_lower(const Message& s, const Message& x, std::span<const Compressor* const> comps);

struct DualityReport {
  std::size_t length = 0;
  std::size_t work_value_lb = 0;
  std::size_t erasure_cost_ub = 0;
  /// work_value_lb + erasure_cost_ub when unclipped; otherwise set to length.
  std::size_t sum = 0;
  bool clipped = false;
};

DualityReport duality_report(const Message& s, const Message& x, std::span<const Compressor* const> comps);

struct LedgerStep {
  std::string action;
  long long work = 0;  // + extracted, - paid
  std::size_t memory_bits = 0;
  std::size_t memory_weight = 0;
};

/// Work ledger of one extract-then-erase cycle on a memory register.
class Ledger {
 public:
  Ledger(std::string compressor, std::uint64_t seed) : compressor_(std::move(compressor)), seed_(seed) {}

  void extract(std::string action, std::size_t units, const BitString& memory_after);
  void pay(std::string action, std::size_t units, const BitString& memory_after);

  std::size_t extracted_work() const { return extracted_; }
  std::size_t paid_erasure() const { return paid_; }
  long long net() const { return static_cast<long long>(extracted_) - static_cast<long long>(paid_); }
  const BitString& memory_state() const { return memory_; }
  const std::vector<LedgerStep>& steps() const { return steps_; }
  std::uint64_t seed() const { return seed_; }
  const std::string& compressor() const { return compressor_; }

  /// {extracted, paid, net, steps[], seed, compressor}
  nlohmann::json to_json() const;

 private:
  void record(std::string action, long long work, const BitString& memory_after);

  std::string compressor_;
  std::uint64_t seed_;
  std::size_t extracted_ = 0;
  std::size_t paid_ = 0;
  BitString memory_;
  std::vector<LedgerStep> steps_;
};

/// Demon cycle on an N-bit register holding s:
///  1. compress s reversibly into c, leaving c followed by N - len(c) zeros;
///  2. extract N - len(c) units from the zero cells, which become PRNG-random;
///  3. erase the compressed record (len(c) units) and the randomized cells
///     (N - len(c) units), restoring the all-zero register.
/// The ledger closes with net = -len(c) <= 0.
Ledger demon_cycle(const BitString& s, const Compressor& comp, std::uint64_t seed);

}  // namespace revlab::thermo
