#pragma once

#include <cstdint>
#include <stdexcept>

#include "revlab/core/bitstring.hpp"

namespace revlab::complexity {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BitWriter {
 public:
  void bit(bool b) { out_.push_back(b); }
  /// `count` bits of `value`, most significant first.
  void bits(std::uint64_t value, unsigned count) {
    for (unsigned i = count; i-- > 0;) out_.push_back((value >> i) & 1);
  }
  void append(const BitString& s) { out_.append(s); }
  /// Elias gamma code of value >= 1: floor(log2 v) zeros, then v in binary.
  void gamma(std::uint64_t value);

  std::size_t size() const { return out_.size(); }
  BitString take() { return std::move(out_); }

 private:
  BitString out_;
};

class BitReader {
 public:
  explicit BitReader(const BitString& in, std::size_t pos = 0) : in_(in), pos_(pos) {}

  bool bit();
  std::uint64_t bits(unsigned count);
  std::uint64_t gamma();
  /// Reads past the end yield zeros; used by the arithmetic decoder.
  bool bit_or_zero() { return pos_ < in_.size() ? in_[pos_++] : (++pos_, false); }

  std::size_t position() const { return pos_; }
  std::size_t remaining() const { return pos_ < in_.size() ? in_.size() - pos_ : 0; }
  bool at_end() const { return pos_ >= in_.size(); }

 private:
  const BitString& in_;
  std::size_t pos_;
};

/// Length in bits of gamma(value).
unsigned gamma_length(std::uint64_t value);

}  // namespace revlab::complexity
