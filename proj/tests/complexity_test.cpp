#include <gtest/gtest.h>

#include <bit>
#include <cmath>

#include "revlab/complexity/bit_io.hpp"
#include "revlab/complexity/estimates.hpp"
#include "revlab/core/rng.hpp"

using namespace revlab;
using namespace revlab::complexity;

namespace {

std::size_t oracle_gamma_length(std::uint64_t v) { return 2 * (std::bit_width(v) - 1) + 1; }

BitString prng(std::size_t n, std::uint64_t seed) {
  Rng r(seed);
  return r.bits(n);
}

BitString periodic(const char* pattern, std::size_t n) {
  const BitString p = BitString::from_string(pattern);
  BitString s(n);
  for (std::size_t i = 0; i < n; ++i) s.set(i, p[i % p.size()]);
  return s;
}

BitString biased(std::size_t n, double p, std::uint64_t seed) {
  Rng r(seed);
  BitString s(n);
  for (std::size_t i = 0; i < n; ++i) s.set(i, r.bernoulli(p));
  return s;
}

// Adversarial and ordinary strings: empty, byte-boundary lengths, single
// long runs, alternations, sparse and dense noise, repeated blocks.
std::vector<BitString> corpus() {
  std::vector<BitString> c;
  c.emplace_back();
  for (std::size_t n : {1, 2, 7, 8, 9, 15, 16, 17, 63, 64, 65}) {
    c.push_back(BitString::zeros(n));
    c.push_back(BitString::ones(n));
    c.push_back(prng(n, n));
  }
  c.push_back(BitString::zeros(4096));
  c.push_back(BitString::ones(5000));
  c.push_back(periodic("01", 4096));
  c.push_back(periodic("0011101", 3001));
  c.push_back(prng(4096, 1));
  c.push_back(prng(10007, 2));
  c.push_back(biased(8192, 0.02, 3));
  c.push_back(biased(8192, 0.97, 4));
  c.push_back(BitString::zeros(3000) + BitString::ones(1) + BitString::zeros(3000));
  const BitString block = prng(777, 5);
  c.push_back(block + block + block);
  BitString runs;
  for (std::size_t k = 1; k < 90; ++k) runs.append(BitString(k, k % 2 == 1));
  c.push_back(runs);
  return c;
}

std::vector<Message> multi_field_corpus() {
  std::vector<Message> c;
  c.push_back(Message());
  c.push_back(join(Message(BitString()), Message(prng(40, 1))));
  Message m;
  m.add_field(BitString()).add_field(prng(12, 2), 3).add_field(BitString::zeros(100));
  c.push_back(m);
  c.push_back(join(Message(prng(2000, 3)), Message(prng(2000, 4))));
  const BitString a = prng(3000, 5);
  c.push_back(join(Message(a), join(Message(a), Message(bit_and(a, prng(3000, 6))))));
  c.push_back(Message::symbols(prng(3 * 500, 7), 3));
  c.push_back(join(Message::symbols(prng(4 * 300, 8), 4), Message(prng(300, 9))));
  Message wide;
  wide.add_field(prng(11 * 50, 10), 11).add_field(prng(10 * 50, 11), 10);
  c.push_back(wide);
  c.push_back(join(Message(prng(100, 12)), Message(prng(57, 13))));
  return c;
}

const Compressor& rle() { return compressor_by_name("rle"); }
const Compressor& lz() { return compressor_by_name("lz77"); }
const Compressor& arith() { return compressor_by_name("arith"); }

}  // namespace

TEST(bit_io, gamma_round_trip) {
  BitWriter w;
  for (std::uint64_t v : {1ull, 2ull, 3ull, 8ull, 1000ull, 1ull << 40}) w.gamma(v);
  w.bits(0b101, 3);
  const BitString s = w.take();
  BitReader r(s);
  for (std::uint64_t v : {1ull, 2ull, 3ull, 8ull, 1000ull, 1ull << 40}) EXPECT_EQ(r.gamma(), v);
  EXPECT_EQ(r.bits(3), 0b101u);
  EXPECT_TRUE(r.at_end());
  EXPECT_THROW(r.bit(), FormatError);
  for (std::uint64_t v = 1; v < 5000; ++v) EXPECT_EQ(gamma_length(v), oracle_gamma_length(v));
  BitWriter g;
  g.gamma(8);
  EXPECT_EQ(g.take().to_string(), "0001000");
}

TEST(message, fields_and_join) {
  const Message a(BitString::from_string("101"));
  EXPECT_EQ(a.fields().size(), 1u);
  EXPECT_FALSE(a.aligned());
  const Message ab = join(a, Message(BitString::from_string("011")));
  EXPECT_TRUE(ab.aligned());
  EXPECT_EQ(ab.flatten().to_string(), "101011");
  EXPECT_EQ(join(Message(BitString()), a), a);
  EXPECT_EQ(join(Message(), a), a);
  EXPECT_FALSE(join(a, Message(BitString::from_string("0111"))).aligned());
  EXPECT_THROW(Message::symbols(BitString(5), 2), std::invalid_argument);
  EXPECT_THROW(Message::symbols(BitString(4), 0), std::invalid_argument);
  EXPECT_EQ(Message::symbols(BitString(6), 3).fields().front().symbols(), 2u);
}

TEST(format, header_layout) {
  // id:4 version:4 gamma(fields+1) {gamma(width) gamma(symbols+1)}* mode:1
  for (const auto* c : builtin_compressors()) {
    EXPECT_EQ(c->header_bits(Message(BitString())), 8 + 3 + 1 + 1 + 1);
    EXPECT_EQ(c->compress(Message(BitString())).size(), 14u);
    EXPECT_EQ(c->compress(Message()).size(), 10u);
    const BitString s = c->compress(Message(BitString::from_string("1")));
    EXPECT_NE(s.slice(0, 4).to_word(), 0u);
  }
  EXPECT_EQ(rle().compress(Message(BitString())).to_string(), "00010001" "010" "1" "1" "0");
  EXPECT_EQ(lz().compress(Message(BitString())).slice(0, 8).to_string(), "00100001");
  EXPECT_EQ(arith().compress(Message(BitString())).slice(0, 8).to_string(), "00110001");
}

TEST(format, rle_is_bit_exact) {
  // 0001111: value bit 0, run 3, the final run of 4 is implied.
  EXPECT_EQ(rle().compress(BitString::from_string("0001111")).to_string(),
            "0001" "0001" "010" "1" "0001000" "1" "0" "011");
  // Longer coded form than the 3 stored bits: stored mode.
  EXPECT_EQ(rle().compress(BitString::from_string("101")).to_string(), "0001" "0001" "010" "1" "00100" "0" "101");
}

TEST(format, zeros_4096_under_64_bits) {
  const BitString z = BitString::zeros(4096);
  const std::size_t expect = 8 + oracle_gamma_length(2) + oracle_gamma_length(1) + oracle_gamma_length(4097) + 1 + 1;
  EXPECT_EQ(khat(rle(), z).bits, expect);
  EXPECT_EQ(expect, 39u);
  EXPECT_LE(khat(rle(), z).bits, 64u);
}

TEST(format, rejects_foreign_or_damaged_streams) {
  const BitString s = lz().compress(prng(500, 1));
  EXPECT_THROW(rle().decompress(s), FormatError);
  EXPECT_THROW(lz().decompress(s.slice(0, s.size() - 20)), FormatError);
  BitString v = s;
  v.flip(7);  // version field
  EXPECT_THROW(lz().decompress(v), FormatError);
  EXPECT_THROW(arith().decompress(BitString::from_string("0011")), FormatError);
  EXPECT_THROW(compressor_by_name("zip"), std::invalid_argument);
}

TEST(round_trip, corpus_every_compressor) {
  for (const auto* c : builtin_compressors()) {
    for (const auto& s : corpus()) {
      const BitString z = c->compress(s);
      ASSERT_EQ(c->decompress(z), Message(s)) << c->name() << " len " << s.size();
      ASSERT_LE(z.size(), s.size() + c->overhead_bits(s)) << c->name();
    }
    for (const auto& m : multi_field_corpus()) {
      const BitString z = c->compress(m);
      ASSERT_EQ(c->decompress(z), m) << c->name();
      ASSERT_LE(z.size(), m.bit_length() + c->overhead_bits(m)) << c->name();
    }
  }
}

TEST(round_trip, random_messages) {
  Rng rng(99);
  for (int t = 0; t < 200; ++t) {
    Message m;
    const auto fields = rng.below(4);
    const auto count = rng.below(300);
    const bool align = rng.bit();
    for (std::uint64_t f = 0; f < fields; ++f) {
      const unsigned w = 1 + static_cast<unsigned>(rng.below(6));
      const auto symbols = align ? count : rng.below(300);
      const double p = rng.unit();
      BitString bits(symbols * w);
      for (std::size_t i = 0; i < bits.size(); ++i) bits.set(i, rng.bernoulli(p));
      m.add_field(std::move(bits), w);
    }
    for (const auto* c : builtin_compressors()) ASSERT_EQ(c->decompress(c->compress(m)), m) << c->name();
  }
}

TEST(determinism, identical_streams) {
  for (const auto* c : builtin_compressors()) {
    for (const auto& s : corpus()) EXPECT_EQ(c->compress(s), c->compress(s));
  }
}

TEST(khat, estimate_fields) {
  const auto e = khat(lz(), prng(1000, 3));
  EXPECT_EQ(e.compressor, "lz77");
  EXPECT_EQ(e.subject_length, 1000u);
  EXPECT_EQ(e.bits, lz().compress(prng(1000, 3)).size());
  // The empty estimate is the pure header constant.
  for (const auto* c : builtin_compressors()) EXPECT_EQ(khat(*c, BitString()).bits, c->header_bits(BitString()));
}

TEST(khat, large_scale_extremes) {
  const std::size_t n = 1 << 16;
  const BitString z = BitString::zeros(n);
  const BitString p = prng(n, 17);
  for (const auto* c : builtin_compressors()) {
    EXPECT_LE(incompressibility_score(*c, z), 0.05) << c->name();
    EXPECT_GE(incompressibility_score(*c, p), 0.9) << c->name();
  }
  EXPECT_GE(static_cast<double>(khat_min(builtin_compressors(), p).bits) / n, 0.9);
  EXPECT_LE(incompressibility_score(lz(), periodic("01", n)), 0.1);
  EXPECT_THROW(incompressibility_score(lz(), BitString()), std::invalid_argument);
}

TEST(khat_min, picks_smallest) {
  const BitString s = periodic("01", 4096);
  const auto best = khat_min(builtin_compressors(), s);
  for (const auto* c : builtin_compressors()) EXPECT_LE(best.bits, khat(*c, s).bits);
  EXPECT_EQ(best.compressor, "lz77");
  EXPECT_THROW(khat_min(std::span<const Compressor* const>{}, s), std::invalid_argument);
}

TEST(khat_cond, examples) {
  const BitString block = prng(1500, 1);
  const BitString structured = block + block + periodic("0011", 3000);
  EXPECT_LE(static_cast<double>(khat_cond(lz(), structured, structured).bits) / structured.size(), 0.1);
  const BitString x = prng(20000, 2), y = prng(20000, 3);
  for (const auto* c : builtin_compressors()) {
    const double cond = static_cast<double>(khat_cond(*c, x, y).bits);
    const double plain = static_cast<double>(khat(*c, x).bits);
    EXPECT_NEAR(cond / plain, 1.0, 0.1) << c->name();
    const long long expect = static_cast<long long>(khat(*c, x).bits) - static_cast<long long>(khat(*c, BitString()).bits);
    EXPECT_EQ(static_cast<long long>(khat_cond(*c, x, BitString()).bits), std::max(0ll, expect)) << c->name();
  }
}

TEST(khat_cond, conditioning_on_aligned_structure) {
  const std::size_t n = 1 << 14;
  const BitString a = prng(n, 4), b = prng(n, 5);
  const double r = static_cast<double>(khat_cond(arith(), bit_and(a, b), b).bits) / n;
  EXPECT_GT(r, 0.4);
  EXPECT_LT(r, 0.6);
  EXPECT_LE(static_cast<double>(khat_cond(arith(), bit_and(a, b), join(Message(a), Message(b))).bits) / n, 0.05);
}

TEST(ik, examples) {
  const std::size_t n = 1 << 16;
  const BitString x = prng(n, 6), y = prng(n, 7);
  for (const Compressor* c : {&lz(), &arith()}) {
    EXPECT_NEAR(static_cast<double>(ik(*c, x, x)), static_cast<double>(khat(*c, x).bits), 0.1 * khat(*c, x).bits)
        << c->name();
  }
  for (const auto* c : builtin_compressors()) {
    EXPECT_LE(std::abs(static_cast<double>(ik(*c, x, y))) / n, 0.05) << c->name();
  }
}

TEST(ik, symmetric_on_corpus) {
  const auto cs = corpus();
  for (const auto* c : builtin_compressors()) {
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::size_t j = 0; j < cs.size(); ++j) {
        if (cs[i].size() != cs[j].size() || cs[i].size() < 1000) continue;
        const double n = static_cast<double>(cs[i].size());
        EXPECT_LE(std::abs(ik(*c, cs[i], cs[j]) - ik(*c, cs[j], cs[i])) / n, 0.05)
            << c->name() << ' ' << i << ' ' << j;
      }
    }
  }
}

TEST(cond_ik, examples) {
  const std::size_t n = 1 << 14;
  const BitString a = prng(n, 8), b = prng(n, 9), c = prng(n, 10);
  for (const auto* comp : builtin_compressors()) {
    EXPECT_LE(std::abs(static_cast<double>(cond_ik(*comp, a, b, c))) / n, 0.05) << comp->name();
  }
  for (const Compressor* comp : {&lz(), &arith()}) {
    EXPECT_NEAR(static_cast<double>(cond_ik(*comp, a, a, BitString())), static_cast<double>(khat(*comp, a).bits),
                0.1 * n)
        << comp->name();
    EXPECT_LE(std::abs(static_cast<double>(cond_ik(*comp, a, b, a))) / n, 0.05) << comp->name();
  }
}

TEST(subadditivity, joint_within_log_slack) {
  // khat(x, y) <= khat(x) + khat(y) + 2 log2(len x + len y) + 32 on the corpus.
  const auto cs = corpus();
  for (const auto* c : builtin_compressors()) {
    for (std::size_t i = 0; i < cs.size(); i += 3) {
      for (std::size_t j = 0; j < cs.size(); j += 5) {
        const double slack = 2 * std::log2(static_cast<double>(cs[i].size() + cs[j].size()) + 2) + 32;
        EXPECT_LE(static_cast<double>(khat(*c, join(Message(cs[i]), Message(cs[j]))).bits),
                  static_cast<double>(khat(*c, cs[i]).bits + khat(*c, cs[j]).bits) + slack)
            << c->name() << ' ' << i << ' ' << j;
      }
    }
  }
}
