#include "revlab/complexity/compressor.hpp"

namespace revlab::complexity {
namespace {

// Run lengths of `bits`, optionally omitting the last one.
void write_runs(const BitString& bits, bool with_last, BitWriter& out) {
  out.bit(bits[0]);
  std::size_t run = 1;
  for (std::size_t i = 1; i < bits.size(); ++i) {
    if (bits[i] == bits[i - 1]) {
      ++run;
    } else {
      out.gamma(run);
      run = 1;
    }
  }
  if (with_last) out.gamma(run);
}

std::size_t runs_length(const BitString& bits) {
  BitWriter w;
  write_runs(bits, true, w);
  return w.size();
}

}  // namespace

void RunLengthCompressor::encode_payload(const Message& m, BitWriter& out) const {
  if (m.fields().size() < 2) {
    const BitString bits = m.flatten();
    if (!bits.empty()) write_runs(bits, false, out);
    return;
  }
  for (const auto& f : m.fields()) {
    if (f.bits.empty()) continue;
    const bool coded = runs_length(f.bits) < f.bits.size();
    out.bit(coded);
    if (coded) {
      write_runs(f.bits, true, out);
    } else {
      out.append(f.bits);
    }
  }
}

BitString RunLengthCompressor::decode_payload(BitReader& in, std::span<const Layout> layout) const {
  BitString out;
  if (layout.size() >= 2) {
    for (const auto& l : layout) {
      const std::size_t len = l.width * l.symbols;
      if (len == 0) continue;
      const std::size_t end = out.size() + len;
      if (!in.bit()) {
        for (std::size_t i = 0; i < len; ++i) out.push_back(in.bit());
        continue;
      }
      bool value = in.bit();
      while (out.size() < end) {
        const std::uint64_t run = in.gamma();
        if (out.size() + run > end) throw FormatError("rle: run overflows field length");
        for (std::uint64_t i = 0; i < run; ++i) out.push_back(value);
        value = !value;
      }
    }
    if (!in.at_end()) throw FormatError("rle: trailing bits after the last field");
    return out;
  }

  std::size_t total = 0;
  for (const auto& l : layout) total += l.width * l.symbols;
  if (total == 0) return out;
  out.reserve(total);
  bool value = in.bit();
  while (!in.at_end()) {
    const std::uint64_t run = in.gamma();
    if (out.size() + run >= total) throw FormatError("rle: run overflows declared length");
    for (std::uint64_t i = 0; i < run; ++i) out.push_back(value);
    value = !value;
  }
  while (out.size() < total) out.push_back(value);
  return out;
}

}  // namespace revlab::complexity
