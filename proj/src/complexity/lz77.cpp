#include <vector>

#include "revlab/complexity/compressor.hpp"

namespace revlab::complexity {

namespace {

constexpr unsigned kHashBits = 15;
constexpr unsigned kOffsetBits = 15;

std::uint32_t hash3(const std::uint8_t* p) {
  const std::uint32_t v = (std::uint32_t{p[0]} << 16) | (std::uint32_t{p[1]} << 8) | p[2];
  return (v * 2654435761u) >> (32 - kHashBits);
}

std::vector<std::uint8_t> pack_fields(const Message& m) {
  std::vector<std::uint8_t> bytes;
  for (const auto& f : m.fields()) {
    const auto b = f.bits.to_bytes();
    bytes.insert(bytes.end(), b.begin(), b.end());
  }
  return bytes;
}

void emit_literals(BitWriter& out, const std::vector<std::uint8_t>& bytes, std::size_t begin, std::size_t end) {
  out.gamma(end - begin + 1);
  for (std::size_t i = begin; i < end; ++i) out.bits(bytes[i], 8);
}

}  // namespace

void Lz77Compressor::encode_payload(const Message& m, BitWriter& out) const {
  const std::vector<std::uint8_t> data = pack_fields(m);
  const std::size_t n = data.size();
  if (n == 0) return;

  std::vector<std::int64_t> head(std::size_t{1} << kHashBits, -1);
  std::vector<std::int64_t> prev(kWindow, -1);
  const auto insert = [&](std::size_t pos) {
    if (pos + kMinMatch > n) return;
    const auto h = hash3(&data[pos]);
    prev[pos % kWindow] = head[h];
    head[h] = static_cast<std::int64_t>(pos);
  };

  std::size_t literal_start = 0;
  std::size_t pos = 0;
  while (pos < n) {
    std::size_t best_len = 0;
    std::size_t best_off = 0;
    if (pos + kMinMatch <= n) {
      std::int64_t cand = head[hash3(&data[pos])];
      for (std::size_t chain = 0; cand >= 0 && chain < kMaxChain; ++chain) {
        const auto c = static_cast<std::size_t>(cand);
        if (pos - c > kWindow) break;
        std::size_t len = 0;
        while (pos + len < n && data[c + len] == data[pos + len]) ++len;
        if (len > best_len) {
          best_len = len;
          best_off = pos - c;
          if (pos + len == n) break;
        }
        const std::int64_t next = prev[c % kWindow];
        if (next >= cand) break;  // slot was overwritten by a newer position
        cand = next;
      }
    }
    if (best_len >= kMinMatch) {
      emit_literals(out, data, literal_start, pos);
      out.bits(best_off - 1, kOffsetBits);
      out.gamma(best_len - kMinMatch + 1);
      for (std::size_t i = 0; i < best_len; ++i) insert(pos + i);
      pos += best_len;
      literal_start = pos;
    } else {
      insert(pos);
      ++pos;
    }
  }
  emit_literals(out, data, literal_start, n);
}

BitString Lz77Compressor::decode_payload(BitReader& in, std::span<const Layout> layout) const {
  std::size_t total = 0;
  for (const auto& l : layout) total += (l.width * l.symbols + 7) / 8;
  std::vector<std::uint8_t> data;
  data.reserve(total);
  while (data.size() < total) {
    const std::uint64_t literals = in.gamma() - 1;
    if (data.size() + literals > total) throw FormatError("lz77: literal run overflows declared length");
    for (std::uint64_t i = 0; i < literals; ++i) data.push_back(static_cast<std::uint8_t>(in.bits(8)));
    if (data.size() == total) break;
    const std::size_t offset = in.bits(kOffsetBits) + 1;
    const std::size_t len = in.gamma() + kMinMatch - 1;
    if (offset > data.size() || data.size() + len > total) throw FormatError("lz77: bad match");
    const std::size_t from = data.size() - offset;
    for (std::size_t i = 0; i < len; ++i) data.push_back(data[from + i]);
  }

  BitString out;
  std::size_t byte = 0;
  for (const auto& l : layout) {
    const std::size_t bits = l.width * l.symbols;
    const std::size_t nbytes = (bits + 7) / 8;
    const BitString chunk = BitString::from_bytes(std::span(data).subspan(byte, nbytes));
    out.append(chunk.slice(0, bits));
    byte += nbytes;
  }
  return out;
}

}  // namespace revlab::complexity
