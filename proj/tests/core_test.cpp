#include <gtest/gtest.h>

#include "revlab/core/bitstring.hpp"
#include "revlab/core/rng.hpp"

using revlab::BitString;
using revlab::Rng;

TEST(bitstring, parse_and_print) {
  const auto s = BitString::from_string("1011");
  ASSERT_EQ(s.size(), 4u);
  EXPECT_TRUE(s[0]);
  EXPECT_FALSE(s[1]);
  EXPECT_EQ(s.to_string(), "1011");
  EXPECT_EQ(s.hamming_weight(), 3u);
  EXPECT_EQ(BitString::from_string("").size(), 0u);
  EXPECT_THROW(BitString::from_string("10x1"), std::invalid_argument);
}

TEST(bitstring, bytes_are_msb_first) {
  const std::uint8_t bytes[] = {0x80, 0x01};
  const auto s = BitString::from_bytes(bytes);
  EXPECT_EQ(s.to_string(), "1000000000000001");
  EXPECT_EQ(s.to_bytes(), std::vector<std::uint8_t>({0x80, 0x01}));
  EXPECT_EQ(BitString::from_string("101").to_bytes(), std::vector<std::uint8_t>({0xA0}));
}

TEST(bitstring, words_are_lsb_first) {
  const auto s = BitString::from_word(0b110, 3);
  EXPECT_EQ(s.to_string(), "011");
  EXPECT_EQ(s.to_word(), 0b110u);
}

TEST(bitstring, slicing_and_ops) {
  const auto a = BitString::from_string("1100");
  const auto b = BitString::from_string("1010");
  EXPECT_EQ(bit_and(a, b).to_string(), "1000");
  EXPECT_EQ(bit_xor(a, b).to_string(), "0110");
  EXPECT_EQ((a + b).to_string(), "11001010");
  EXPECT_EQ(a.slice(1, 3).to_string(), "10");
  EXPECT_EQ(a.hamming_weight(1, 4), 1u);
  EXPECT_THROW(bit_and(a, BitString(3)), std::invalid_argument);
  EXPECT_THROW(a.at(4), std::out_of_range);
}

TEST(bitstring, weight_never_exceeds_length) {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto s = rng.bits(rng.below(300));
    EXPECT_LE(s.hamming_weight(), s.size());
    EXPECT_EQ(BitString::from_string(s.to_string()), s);
  }
}

TEST(rng, deterministic_and_bounded) {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.below(7);
    EXPECT_EQ(x, b.below(7));
    EXPECT_LT(x, 7u);
  }
  EXPECT_NE(revlab::mix_seed(1, 0), revlab::mix_seed(1, 1));
  EXPECT_NE(revlab::mix_seed(1, 0), revlab::mix_seed(2, 0));
}

TEST(rng, unit_interval) {
  Rng r(3);
  double sum = 0;
  for (int i = 0; i < 100000; ++i) {
    const double u = r.unit();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  // 3 sigma of the mean of 1e5 uniforms is about 0.0027.
  EXPECT_NEAR(sum / 100000, 0.5, 0.0028);
}
