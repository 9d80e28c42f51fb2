#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace revlab {

/// Finite bit sequence. Index 0 is the leftmost bit in every textual form.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t length, bool value = false)
      : bits_(length, value ? 1 : 0) {}

  /// Parses ASCII '0'/'1'. Throws std::invalid_argument on any other char.
  static BitString from_string(std::string_view text);
  /// Unpacks bytes MSB-first: byte 0 bit 7 becomes index 0.
  static BitString from_bytes(std::span<const std::uint8_t> bytes);
  /// Bit i of the result is bit i of `word` (LSB = wire 0).
  static BitString from_word(std::uint64_t word, std::size_t length);
  static BitString zeros(std::size_t length) { return BitString(length); }
  static BitString ones(std::size_t length) { return BitString(length, true); }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  bool at(std::size_t i) const;
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
  void flip(std::size_t i) { bits_[i] ^= 1; }
  void push_back(bool value) { bits_.push_back(value ? 1 : 0); }
  void append(const BitString& other);
  void reserve(std::size_t n) { bits_.reserve(n); }

  std::size_t hamming_weight() const;
  std::size_t hamming_weight(std::size_t begin, std::size_t end) const;

  BitString slice(std::size_t begin, std::size_t end) const;
  std::string to_string() const;
  /// Packs MSB-first, zero-padding the final byte.
  std::vector<std::uint8_t> to_bytes() const;
  /// Requires size() <= 64.
  std::uint64_t to_word() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

BitString operator+(const BitString& lhs, const BitString& rhs);
/// Bitwise AND/XOR of equal-length strings.
BitString bit_and(const BitString& lhs, const BitString& rhs);
BitString bit_xor(const BitString& lhs, const BitString& rhs);

}  // namespace revlab
