#include "revlab/complexity/bit_io.hpp"

#include <bit>

namespace revlab::complexity {

unsigned gamma_length(std::uint64_t value) {
  if (value == 0) throw std::invalid_argument("gamma code undefined for 0");
  return 2 * static_cast<unsigned>(std::bit_width(value)) - 1;
}

void BitWriter::gamma(std::uint64_t value) {
  if (value == 0) throw std::invalid_argument("gamma code undefined for 0");
  const auto width = static_cast<unsigned>(std::bit_width(value));
  for (unsigned i = 1; i < width; ++i) out_.push_back(false);
  bits(value, width);
}

bool BitReader::bit() {
  if (pos_ >= in_.size()) throw FormatError("unexpected end of compressed stream");
  return in_[pos_++];
}

std::uint64_t BitReader::bits(unsigned count) {
  std::uint64_t v = 0;
  for (unsigned i = 0; i < count; ++i) v = (v << 1) | (bit() ? 1u : 0u);
  return v;
}

std::uint64_t BitReader::gamma() {
  unsigned zeros = 0;
  while (!bit()) {
    if (++zeros > 63) throw FormatError("malformed gamma code");
  }
  std::uint64_t v = 1;
  for (unsigned i = 0; i < zeros; ++i) v = (v << 1) | (bit() ? 1u : 0u);
  return v;
}

}  // namespace revlab::complexity
