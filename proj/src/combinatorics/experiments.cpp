#include "revlab/combinatorics/experiments.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <stdexcept>
#include <thread>
#include <vector>

#include "revlab/combinatorics/bounds.hpp"
#include "revlab/core/rng.hpp"

namespace revlab::combinatorics {

using circuit::Circuit;

WeightCouple WeightCouple::of(const BitString& s) {
  if (s.size() % 2 != 0) throw std::domain_error("weight couple of odd-length string");
  const std::size_t n = s.size() / 2;
  return {s.hamming_weight(0, n), s.hamming_weight(n, s.size()), n};
}

WeightCouple WeightCouple::of(std::uint64_t word, std::size_t half_length) {
  const std::uint64_t low = half_length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << half_length) - 1;
  return {static_cast<std::size_t>(std::popcount(word & low)),
          static_cast<std::size_t>(std::popcount(word & ~low)), half_length};
}

BigInt WeightCouple::size() const {
  const auto n = static_cast<long long>(half_length);
  return exact_binom(n, static_cast<long long>(left_weight)) * exact_binom(n, static_cast<long long>(right_weight));
}

double TransitionHistogram::frequency(const WeightCouple& c) const {
  auto it = counts.find(c);
  if (it == counts.end() || trials == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(trials);
}

double TransitionHistogram::frequency_more_imbalanced() const {
  std::uint64_t hits = 0;
  for (const auto& [couple, count] : counts) {
    if (couple.left_weight > source.left_weight) hits += count;
  }
  return trials == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(trials);
}

void TransitionHistogram::write_csv(std::ostream& out) const {
  out << "left_weight,right_weight,count,frequency\n";
  for (const auto& [couple, count] : counts) {
    out << couple.left_weight << ',' << couple.right_weight << ',' << count << ',' << std::setprecision(12)
        << frequency(couple) << '\n';
  }
}

WeightCouple source_couple(std::size_t width, const ExactRational& w) {
  if (width == 0 || width % 2 != 0) throw std::domain_error("transition histogram needs a positive even width");
  if (w < ExactRational(0) || w > ExactRational(1)) throw std::domain_error("w must lie in [0, 1]");
  const std::size_t n = width / 2;
  const ExactRational heavy = w * ExactRational(static_cast<long long>(n));
  if (!heavy.is_integer()) throw std::domain_error("infeasible couple: w * n is not an integer");
  const auto left = heavy.numerator().convert_to<std::size_t>();
  return {left, n - left, n};
}

namespace {

void require_conservative(const Circuit& c) {
  if (circuit::is_conservative_by_construction(c)) return;
  if (c.width() <= circuit::kMaxExhaustiveWidth && circuit::is_conservative(c)) return;
  throw std::domain_error("circuit is not (certifiably) conservative");
}

/// Uniform k-subset of [0, n) as bit positions via partial Fisher-Yates.
void draw_subset(Rng& rng, std::size_t n, std::size_t k, std::vector<std::size_t>& scratch,
                 std::vector<std::size_t>& out) {
  scratch.resize(n);
  for (std::size_t i = 0; i < n; ++i) scratch[i] = i;
  out.clear();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.below(n - i);
    std::swap(scratch[i], scratch[j]);
    out.push_back(scratch[i]);
  }
}

constexpr std::uint64_t kChunk = 4096;

std::map<WeightCouple, std::uint64_t> run_chunk(const Circuit& c, const WeightCouple& src, std::uint64_t trials,
                                                std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = src.half_length;
  const std::size_t total = src.left_weight + src.right_weight;
  std::map<WeightCouple, std::uint64_t> counts;
  std::vector<std::size_t> scratch, left, right;
  for (std::uint64_t t = 0; t < trials; ++t) {
    draw_subset(rng, n, src.left_weight, scratch, left);
    draw_subset(rng, n, src.right_weight, scratch, right);
    WeightCouple out;
    if (c.width() <= 64) {
      std::uint64_t x = 0;
      for (auto i : left) x |= std::uint64_t{1} << i;
      for (auto i : right) x |= std::uint64_t{1} << (n + i);
      out = WeightCouple::of(c.eval(x), n);
    } else {
      BitString x(c.width());
      for (auto i : left) x.set(i, true);
      for (auto i : right) x.set(n + i, true);
      out = WeightCouple::of(c.eval(x));
    }
    if (out.left_weight + out.right_weight != total) throw std::domain_error("circuit changed the Hamming weight");
    ++counts[out];
  }
  return counts;
}

/// Visits every n-bit word with popcount k (Gosper's hack).
template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  if (k == 0) {
    f(std::uint64_t{0});
    return;
  }
  std::uint64_t v = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (v < limit) {
    f(v);
    const std::uint64_t t = v | (v - 1);
    v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
  }
}

}  // namespace

TransitionHistogram empirical_transition_histogram(const Circuit& c, const ExactRational& w, std::uint64_t trials,
                                                   std::uint64_t seed, unsigned threads) {
  const WeightCouple src = source_couple(c.width(), w);
  require_conservative(c);

  const std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
  std::vector<std::map<WeightCouple, std::uint64_t>> partial(chunks);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(chunks, 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::uint64_t k = t; k < chunks; k += threads) {
          const std::uint64_t len = std::min(kChunk, trials - k * kChunk);
          partial[k] = run_chunk(c, src, len, mix_seed(seed, k));
        }
      });
    }
  }
  TransitionHistogram h{src, trials, {}};
  for (const auto& part : partial) {
    for (const auto& [couple, count] : part) h.counts[couple] += count;
  }
  return h;
}

std::map<WeightCouple, std::uint64_t> exhaustive_transition_counts(const Circuit& c, const WeightCouple& source) {
  if (c.width() > circuit::kMaxExhaustiveWidth || c.width() != 2 * source.half_length) {
    throw std::domain_error("exhaustive_transition_counts: width must equal 2n and be <= 20");
  }
  const std::size_t n = source.half_length;
  std::map<WeightCouple, std::uint64_t> counts;
  for_each_combination(n, source.left_weight, [&](std::uint64_t l) {
    for_each_combination(n, source.right_weight, [&](std::uint64_t r) {
      ++counts[WeightCouple::of(c.eval(l | (r << n)), n)];
    });
  });
  return counts;
}

std::uint64_t concentration_count(const Circuit& c, std::size_t weight, std::size_t n) {
  if (c.width() > circuit::kMaxExhaustiveWidth) throw std::domain_error("concentration_count: width exceeds 20");
  if (n > weight || weight > c.width()) return 0;
  const std::uint64_t head = (std::uint64_t{1} << n) - 1;
  std::uint64_t hits = 0;
  for_each_combination(c.width(), weight, [&](std::uint64_t x) {
    const std::uint64_t y = c.eval(x);
    if ((y & head) == head && static_cast<std::size_t>(std::popcount(y & ~head)) == weight - n) ++hits;
  });
  return hits;
}

}  // namespace revlab::combinatorics
