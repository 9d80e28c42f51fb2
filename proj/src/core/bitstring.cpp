#include "revlab/core/bitstring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace revlab {

BitString BitString::from_string(std::string_view text) {
  BitString out;
  out.bits_.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument(std::string("bit string may only contain '0' and '1', got '") + c +
                                  "'");
    }
    out.bits_.push_back(c == '1' ? 1 : 0);
  }
  return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes) {
  BitString out;
  out.bits_.reserve(bytes.size() * 8);
  for (std::uint8_t byte : bytes) {
    for (int b = 7; b >= 0; --b) out.bits_.push_back((byte >> b) & 1);
  }
  return out;
}

BitString BitString::from_word(std::uint64_t word, std::size_t length) {
  if (length > 64) throw std::invalid_argument("from_word: length exceeds 64");
  BitString out(length);
  for (std::size_t i = 0; i < length; ++i) out.bits_[i] = (word >> i) & 1;
  return out;
}

bool BitString::at(std::size_t i) const {
  if (i >= bits_.size()) throw std::out_of_range("BitString index out of range");
  return bits_[i] != 0;
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

std::size_t BitString::hamming_weight() const {
  return std::accumulate(bits_.begin(), bits_.end(), std::size_t{0});
}

std::size_t BitString::hamming_weight(std::size_t begin, std::size_t end) const {
  if (begin > end || end > bits_.size()) throw std::out_of_range("hamming_weight: bad range");
  return std::accumulate(bits_.begin() + static_cast<std::ptrdiff_t>(begin),
                         bits_.begin() + static_cast<std::ptrdiff_t>(end), std::size_t{0});
}

BitString BitString::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > bits_.size()) throw std::out_of_range("slice: bad range");
  BitString out;
  out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(begin),
                   bits_.begin() + static_cast<std::ptrdiff_t>(end));
  return out;
}

std::string BitString::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

std::vector<std::uint8_t> BitString::to_bytes() const {
  std::vector<std::uint8_t> out((bits_.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  }
  return out;
}

std::uint64_t BitString::to_word() const {
  if (bits_.size() > 64) throw std::invalid_argument("to_word: length exceeds 64");
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) w |= std::uint64_t{bits_[i]} << i;
  return w;
}

BitString operator+(const BitString& lhs, const BitString& rhs) {
  BitString out = lhs;
  out.append(rhs);
  return out;
}

namespace {

template <typename Op>
BitString zip_bits(const BitString& lhs, const BitString& rhs, Op op) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("bitwise op on strings of unequal length");
  BitString out(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) out.set(i, op(lhs[i], rhs[i]));
  return out;
}

}  // namespace

BitString bit_and(const BitString& lhs, const BitString& rhs) {
  return zip_bits(lhs, rhs, [](bool a, bool b) { return a && b; });
}

BitString bit_xor(const BitString& lhs, const BitString& rhs) {
  return zip_bits(lhs, rhs, [](bool a, bool b) { return a != b; });
}

}  // namespace revlab
