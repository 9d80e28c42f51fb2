#include "revlab/complexity/compressor.hpp"

#include <algorithm>
#include <array>

namespace revlab::complexity {

Message::Message(BitString bits) { fields_.push_back({std::move(bits), 1}); }

Message Message::symbols(BitString bits, unsigned width) {
  Message m;
  m.add_field(std::move(bits), width);
  return m;
}

Message& Message::add_field(BitString bits, unsigned width) {
  if (width == 0) throw std::invalid_argument("symbol width must be positive");
  if (bits.size() % width != 0) throw std::invalid_argument("field length is not a multiple of its symbol width");
  fields_.push_back({std::move(bits), width});
  return *this;
}

std::size_t Message::bit_length() const {
  std::size_t n = 0;
  for (const auto& f : fields_) n += f.bits.size();
  return n;
}

bool Message::aligned() const {
  if (fields_.size() < 2) return false;
  const std::size_t count = fields_.front().symbols();
  return std::all_of(fields_.begin(), fields_.end(), [count](const Field& f) { return f.symbols() == count; });
}

BitString Message::flatten() const {
  BitString out;
  out.reserve(bit_length());
  for (const auto& f : fields_) out.append(f.bits);
  return out;
}

Message join(const Message& head, const Message& tail) {
  Message out;
  for (const auto& f : head.fields_) {
    if (!f.bits.empty()) out.fields_.push_back(f);
  }
  out.fields_.insert(out.fields_.end(), tail.fields_.begin(), tail.fields_.end());
  return out;
}

std::size_t Compressor::header_bits(const Message& m) const {
  std::size_t n = 8 + gamma_length(m.fields().size() + 1) + 1;
  for (const auto& f : m.fields()) n += gamma_length(f.width) + gamma_length(f.symbols() + 1);
  return n;
}

BitString Compressor::compress(const Message& m) const {
  BitWriter out;
  out.bits(id(), 4);
  out.bits(kVersion, 4);
  out.gamma(m.fields().size() + 1);
  for (const auto& f : m.fields()) {
    out.gamma(f.width);
    out.gamma(f.symbols() + 1);
  }
  BitWriter payload;
  encode_payload(m, payload);
  if (payload.size() < m.bit_length()) {
    out.bit(true);
    out.append(payload.take());
  } else {
    out.bit(false);
    for (const auto& f : m.fields()) out.append(f.bits);
  }
  return out.take();
}

Message Compressor::decompress(const BitString& stream) const {
  BitReader in(stream);
  if (in.bits(4) != id()) throw FormatError(std::string(name()) + ": stream has a different compressor id");
  if (in.bits(4) != kVersion) throw FormatError(std::string(name()) + ": unsupported stream version");
  const std::uint64_t field_count = in.gamma() - 1;
  std::vector<Layout> layout;
  std::size_t total = 0;
  for (std::uint64_t k = 0; k < field_count; ++k) {
    const auto width = static_cast<unsigned>(in.gamma());
    const std::size_t symbols = in.gamma() - 1;
    layout.push_back({width, symbols});
    total += width * symbols;
  }
  BitString flat;
  if (in.bit()) {
    flat = decode_payload(in, layout);
    if (flat.size() != total) throw FormatError(std::string(name()) + ": payload length mismatch");
  } else {
    if (in.remaining() != total) throw FormatError(std::string(name()) + ": stored payload length mismatch");
    flat = stream.slice(in.position(), stream.size());
  }
  Message m;
  std::size_t pos = 0;
  for (const auto& l : layout) {
    const std::size_t len = l.width * l.symbols;
    m.add_field(flat.slice(pos, pos + len), l.width);
    pos += len;
  }
  return m;
}

std::span<const Compressor* const> builtin_compressors() {
  static const RunLengthCompressor rle;
  static const Lz77Compressor lz;
  static const ArithmeticCompressor arith;
  static const std::array<const Compressor*, 3> all{&rle, &lz, &arith};
  return all;
}

const Compressor& compressor_by_name(std::string_view name) {
  for (const Compressor* c : builtin_compressors()) {
    if (c->name() == name) return *c;
  }
  throw std::invalid_argument("unknown compressor '" + std::string(name) + "' (expected rle, lz77 or arith)");
}

}  // namespace revlab::complexity
