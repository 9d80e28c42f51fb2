#include "revlab/nonlocal/games.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <iterator>
#include <numbers>

namespace revlab::nonlocal {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool is_power_of_two(unsigned m) { return m >= 2 && std::has_single_bit(m); }

void check_chained_strategy(unsigned m, const Strategy& s) {
  std::visit(overloaded{
                 [&](const ChainedQuantum& q) {
                   if (q.m != m) throw GameError("strategy built for m=" + std::to_string(q.m));
                 },
                 [&](const ChainedDeterministic& d) {
                   if (d.m != m) throw GameError("strategy built for m=" + std::to_string(d.m));
                   if (d.x_table.size() != m || d.y_table.size() != m) {
                     throw GameError("deterministic chained tables must have m entries");
                   }
                 },
                 [](const auto&) { throw GameError("PR strategy passed to the chained game"); },
             },
             s);
}

BitString read_source_bits(const std::string& path, std::size_t needed) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GameError("cannot open input source '" + path + "'");
  const std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  BitString bits = BitString::from_bytes(bytes);
  if (bits.size() < needed) {
    throw GameError("input source '" + path + "' holds " + std::to_string(bits.size()) + " bits, " +
                    std::to_string(needed) + " needed");
  }
  return bits;
}

}  // namespace

LocalDeterministic LocalDeterministic::random(std::size_t block, Rng& rng) {
  if (block == 0 || block > 16) throw GameError("local strategy block must be in 1..16");
  const std::uint64_t size = std::uint64_t{1} << block;
  LocalDeterministic s;
  s.block = block;
  s.f.resize(size);
  s.g.resize(size);
  for (auto& v : s.f) v = rng.below(size);
  for (auto& v : s.g) v = rng.below(size);
  return s;
}

std::string strategy_tag(const Strategy& s) {
  return std::visit(overloaded{
                        [](const LocalDeterministic&) { return std::string("local"); },
                        [](const PROracle&) { return std::string("oracle"); },
                        [](const Signaling&) { return std::string("signaling"); },
                        [](const ChainedQuantum&) { return std::string("quantum"); },
                        [](const ChainedDeterministic&) { return std::string("deterministic"); },
                    },
                    s);
}

std::pair<bool, bool> pr_play(const Strategy& s, bool a, bool b, Rng& rng) {
  return std::visit(overloaded{
                        [&](const PROracle&) {
                          const bool x = rng.bit();
                          return std::pair{x, x != (a && b)};
                        },
                        [&](const Signaling&) { return std::pair{a && b, false}; },
                        [&](const LocalDeterministic& d) {
                          if (d.block != 1 || d.f.size() != 2 || d.g.size() != 2) {
                            throw GameError("pr_play needs a one-round local strategy");
                          }
                          return std::pair{(d.f[a] & 1) != 0, (d.g[b] & 1) != 0};
                        },
                        [](const auto&) -> std::pair<bool, bool> {
                          throw GameError("chained strategy passed to the PR game");
                        },
                    },
                    s);
}

BigInt pr_count_satisfying(std::span<const std::uint64_t> f, std::span<const std::uint64_t> g, std::size_t n) {
  if (n > 3) throw GameError("pr_count_satisfying: n must be <= 3");
  const std::uint64_t size = std::uint64_t{1} << n;
  if (f.size() != size || g.size() != size) throw GameError("pr_count_satisfying: tables need 2^n entries");
  for (std::uint64_t i = 0; i < size; ++i) {
    if (f[i] >= size || g[i] >= size) throw GameError("pr_count_satisfying: table entry exceeds n bits");
  }
  unsigned long long count = 0;
  for (std::uint64_t a = 0; a < size; ++a) {
    for (std::uint64_t b = 0; b < size; ++b) count += (f[a] ^ g[b]) == (a & b);
  }
  return BigInt(count);
}

ExactRational pr_value_bruteforce(std::size_t n) {
  if (n > 2) throw GameError("pr_value_bruteforce: n must be <= 2");
  const std::uint64_t size = std::uint64_t{1} << n;
  // Tables are enumerated as base-`size` numbers of `size` digits.
  std::uint64_t tables = 1;
  for (std::uint64_t i = 0; i < size; ++i) tables *= size;
  auto decode = [&](std::uint64_t code) {
    std::vector<std::uint64_t> t(size);
    for (auto& v : t) {
      v = code % size;
      code /= size;
    }
    return t;
  };
  std::vector<std::vector<std::uint64_t>> all;
  all.reserve(tables);
  for (std::uint64_t c = 0; c < tables; ++c) all.push_back(decode(c));

  BigInt best = 0;
  for (const auto& f : all) {
    for (const auto& g : all) best = std::max(best, pr_count_satisfying(f, g, n));
  }
  return ExactRational(best, BigInt(size * size));
}

double chained_quantum_error(unsigned m) {
  if (m < 2) throw GameError("chained game needs m >= 2");
  const double s = std::sin(std::numbers::pi / (4.0 * m));
  return s * s;
}

std::pair<bool, bool> chained_play(unsigned m, const Strategy& s, unsigned a, unsigned b, Rng& rng) {
  if (!promise_holds(m, a, b)) {
    throw GameError("promise violated: (a, b) = (" + std::to_string(a) + ", " + std::to_string(b) + ") with m=" +
                    std::to_string(m));
  }
  check_chained_strategy(m, s);
  if (const auto* d = std::get_if<ChainedDeterministic>(&s)) return {d->x_table[a - 1], d->y_table[b - 1]};
  const double pi = std::numbers::pi;
  const double theta_a = a * pi / m;
  const double theta_b = (b - 0.5) * pi / m;
  const double half = std::sin((theta_a - theta_b) / 2.0);
  const bool x = rng.bit();
  return {x, x != rng.bernoulli(half * half)};
}

ChainedValue chained_classical_value(unsigned m) {
  if (m < 2 || m > 12) throw GameError("chained_classical_value: m must be in 2..12");
  // Bit (a-1) of x and y holds the output for setting a. Constraint (a, a)
  // wants x_a == y_a; constraint (a, a+1) wants x_a xor y_(a+1) == [a == m].
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  const std::uint32_t target = std::uint32_t{1} << (m - 1);
  int best = 0;
  for (std::uint32_t x = 0; x <= full; ++x) {
    for (std::uint32_t y = 0; y <= full; ++y) {
      const std::uint32_t ry = ((y >> 1) | (y << (m - 1))) & full;
      const int sat = std::popcount(~(x ^ y) & full) + std::popcount(~(x ^ ry ^ target) & full);
      best = std::max(best, sat);
    }
  }
  ExactRational value(BigInt(best), BigInt(2 * m));
  return {value, ExactRational(1) - value};
}

InputSource InputSource::parse(const std::string& spec) {
  if (spec == "prng") return {};
  if (spec.rfind("file:", 0) == 0 && spec.size() > 5) return {Kind::File, spec.substr(5)};
  throw GameError("input source must be 'prng' or 'file:PATH', got '" + spec + "'");
}

std::string InputSource::tag() const { return kind == Kind::Prng ? "prng" : "file:" + path; }

PRTranscript run_pr_game(std::size_t n, const Strategy& s, const InputSource& src, std::uint64_t seed) {
  BitString a(n), b(n), x(n), y(n);
  if (src.kind == InputSource::Kind::File) {
    const BitString bits = read_source_bits(src.path, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      a.set(i, bits[2 * i]);
      b.set(i, bits[2 * i + 1]);
    }
  } else {
    Rng inputs(mix_seed(seed, 0));
    for (std::size_t i = 0; i < n; ++i) {
      a.set(i, inputs.bit());
      b.set(i, inputs.bit());
    }
  }

  Rng play(mix_seed(seed, 1));
  if (const auto* d = std::get_if<LocalDeterministic>(&s)) {
    const std::size_t k = d->block;
    const std::uint64_t size = std::uint64_t{1} << k;
    if (k == 0 || k > 16 || d->f.size() != size || d->g.size() != size) {
      throw GameError("local strategy tables need 2^block entries");
    }
    if (n % k != 0) throw GameError("round count must be a multiple of the strategy block");
    for (std::size_t start = 0; start < n; start += k) {
      std::uint64_t wa = 0, wb = 0;
      for (std::size_t j = 0; j < k; ++j) {
        wa |= std::uint64_t{a[start + j]} << j;
        wb |= std::uint64_t{b[start + j]} << j;
      }
      const std::uint64_t fx = d->f[wa], gy = d->g[wb];
      for (std::size_t j = 0; j < k; ++j) {
        x.set(start + j, (fx >> j) & 1);
        y.set(start + j, (gy >> j) & 1);
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const auto [xi, yi] = pr_play(s, a[i], b[i], play);
      x.set(i, xi);
      y.set(i, yi);
    }
  }
  return PRTranscript(std::move(a), std::move(b), std::move(x), std::move(y), strategy_tag(s), seed, src.tag());
}

ChainedTranscript run_chained_game(std::size_t n, unsigned m, const Strategy& s, const InputSource& src,
                                   std::uint64_t seed) {
  if (m < 2) throw GameError("chained game needs m >= 2");
  check_chained_strategy(m, s);
  std::vector<unsigned> a(n), b(n);
  if (src.kind == InputSource::Kind::File) {
    if (!is_power_of_two(m)) throw GameError("file-driven chained games need m to be a power of two");
    const unsigned k = static_cast<unsigned>(std::countr_zero(m));
    const BitString bits = read_source_bits(src.path, n * (k + 1));
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n; ++i) {
      unsigned v = 0;
      for (unsigned j = 0; j < k; ++j) v = (v << 1) | unsigned{bits[pos++]};
      a[i] = v + 1;
      b[i] = bits[pos++] ? a[i] % m + 1 : a[i];
    }
  } else {
    Rng inputs(mix_seed(seed, 0));
    for (std::size_t i = 0; i < n; ++i) {
      const auto pair = inputs.below(2 * m);
      a[i] = static_cast<unsigned>(pair / 2) + 1;
      b[i] = pair % 2 ? a[i] % m + 1 : a[i];
    }
  }

  Rng play(mix_seed(seed, 1));
  BitString x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [xi, yi] = chained_play(m, s, a[i], b[i], play);
    x.set(i, xi);
    y.set(i, yi);
  }
  return ChainedTranscript(m, std::move(a), std::move(b), std::move(x), std::move(y), strategy_tag(s), seed,
                           src.tag());
}

GameKind parse_game_kind(const std::string& name) {
  if (name == "pr") return GameKind::Pr;
  if (name == "chained") return GameKind::Chained;
  throw GameError("unknown game kind '" + name + "' (expected pr or chained)");
}

Transcript run_game(GameKind kind, std::size_t n, unsigned m, const Strategy& s, const InputSource& src,
                    std::uint64_t seed) {
  if (kind == GameKind::Pr) return run_pr_game(n, s, src, seed);
  return run_chained_game(n, m, s, src, seed);
}

}  // namespace revlab::nonlocal
