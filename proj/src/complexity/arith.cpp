#include <vector>

#include "revlab/complexity/compressor.hpp"

namespace revlab::complexity {

namespace {

constexpr std::uint64_t kTop = 0xFFFFFFFFull;
constexpr std::uint64_t kHalf = 0x80000000ull;
constexpr std::uint64_t kQuarter = 0x40000000ull;
constexpr std::uint32_t kMaxTotal = 1u << 16;

struct BitModel {
  std::uint32_t c0 = 1;
  std::uint32_t c1 = 1;

  void update(bool bit) {
    (bit ? c1 : c0) += 1;
    if (c0 + c1 > kMaxTotal) {
      c0 = (c0 + 1) / 2;
      c1 = (c1 + 1) / 2;
    }
  }
};

std::uint64_t split_point(std::uint64_t low, std::uint64_t high, const BitModel& m) {
  const std::uint64_t range = high - low + 1;
  return low + range * m.c0 / (m.c0 + m.c1) - 1;
}

class Encoder {
 public:
  explicit Encoder(BitWriter& out) : out_(out) {}

  void encode(bool bit, BitModel& m) {
    const std::uint64_t split = split_point(low_, high_, m);
    if (bit) {
      low_ = split + 1;
    } else {
      high_ = split;
    }
    m.update(bit);
    for (;;) {
      if (high_ < kHalf) {
        emit(false);
      } else if (low_ >= kHalf) {
        emit(true);
        low_ -= kHalf;
        high_ -= kHalf;
      } else if (low_ >= kQuarter && high_ < kHalf + kQuarter) {
        ++pending_;
        low_ -= kQuarter;
        high_ -= kQuarter;
      } else {
        break;
      }
      low_ = 2 * low_;
      high_ = 2 * high_ + 1;
    }
  }

  void finish() {
    ++pending_;
    emit(low_ >= kQuarter);
  }

 private:
  void emit(bool bit) {
    out_.bit(bit);
    for (; pending_ > 0; --pending_) out_.bit(!bit);
  }

  BitWriter& out_;
  std::uint64_t low_ = 0;
  std::uint64_t high_ = kTop;
  std::uint64_t pending_ = 0;
};

class Decoder {
 public:
  explicit Decoder(BitReader& in) : in_(in) {
    for (int i = 0; i < 32; ++i) value_ = (value_ << 1) | (in_.bit_or_zero() ? 1u : 0u);
  }

  bool decode(BitModel& m) {
    const std::uint64_t split = split_point(low_, high_, m);
    const bool bit = value_ > split;
    if (bit) {
      low_ = split + 1;
    } else {
      high_ = split;
    }
    m.update(bit);
    for (;;) {
      if (high_ < kHalf) {
        // nothing to subtract
      } else if (low_ >= kHalf) {
        low_ -= kHalf;
        high_ -= kHalf;
        value_ -= kHalf;
      } else if (low_ >= kQuarter && high_ < kHalf + kQuarter) {
        low_ -= kQuarter;
        high_ -= kQuarter;
        value_ -= kQuarter;
      } else {
        break;
      }
      low_ = 2 * low_;
      high_ = 2 * high_ + 1;
      value_ = 2 * value_ + (in_.bit_or_zero() ? 1u : 0u);
    }
    return bit;
  }

 private:
  BitReader& in_;
  std::uint64_t low_ = 0;
  std::uint64_t high_ = kTop;
  std::uint64_t value_ = 0;
};

/// Binary-tree model over `width`-bit symbols; node 1 is the root.
class SymbolTree {
 public:
  explicit SymbolTree(unsigned width) : nodes_(std::size_t{1} << width) {}
  BitModel& at(std::size_t node) { return nodes_[node]; }

 private:
  std::vector<BitModel> nodes_;
};

unsigned record_width(std::span<const unsigned> widths) {
  unsigned w = 0;
  for (auto x : widths) w += x;
  return w;
}

/// Visits field bits in coding order: record-major when `joint`, field-major
/// otherwise. f(field, bit index within field, tree, node).
template <typename F>
void walk(std::span<const unsigned> widths, std::span<const std::size_t> symbols, bool joint, F&& f) {
  if (joint) {
    SymbolTree tree(record_width(widths));
    for (std::size_t r = 0; r < symbols[0]; ++r) {
      std::size_t node = 1;
      for (std::size_t k = 0; k < widths.size(); ++k) {
        for (unsigned b = 0; b < widths[k]; ++b) node = 2 * node + f(k, r * widths[k] + b, tree.at(node));
      }
    }
  } else {
    for (std::size_t k = 0; k < widths.size(); ++k) {
      SymbolTree tree(widths[k]);
      for (std::size_t r = 0; r < symbols[k]; ++r) {
        std::size_t node = 1;
        for (unsigned b = 0; b < widths[k]; ++b) node = 2 * node + f(k, r * widths[k] + b, tree.at(node));
      }
    }
  }
}

bool use_joint(std::span<const unsigned> widths, std::span<const std::size_t> symbols) {
  if (widths.size() < 2) return false;
  for (auto s : symbols) {
    if (s != symbols[0]) return false;
  }
  return record_width(widths) <= ArithmeticCompressor::kMaxRecordWidth;
}

}  // namespace

void ArithmeticCompressor::encode_payload(const Message& m, BitWriter& out) const {
  std::vector<unsigned> widths;
  std::vector<std::size_t> symbols;
  for (const auto& f : m.fields()) {
    if (f.width > kMaxRecordWidth) throw std::invalid_argument("arith: symbol width exceeds 20 bits");
    widths.push_back(f.width);
    symbols.push_back(f.symbols());
  }
  if (m.bit_length() == 0) return;
  Encoder enc(out);
  walk(widths, symbols, use_joint(widths, symbols), [&](std::size_t k, std::size_t i, BitModel& model) {
    const bool bit = m.fields()[k].bits[i];
    enc.encode(bit, model);
    return static_cast<std::size_t>(bit);
  });
  enc.finish();
}

BitString ArithmeticCompressor::decode_payload(BitReader& in, std::span<const Layout> layout) const {
  std::vector<unsigned> widths;
  std::vector<std::size_t> symbols;
  std::vector<BitString> fields;
  std::size_t total = 0;
  for (const auto& l : layout) {
    if (l.width > kMaxRecordWidth) throw FormatError("arith: symbol width exceeds 20 bits");
    widths.push_back(l.width);
    symbols.push_back(l.symbols);
    fields.emplace_back(l.width * l.symbols);
    total += l.width * l.symbols;
  }
  if (total == 0) return {};
  Decoder dec(in);
  walk(widths, symbols, use_joint(widths, symbols), [&](std::size_t k, std::size_t i, BitModel& model) {
    const bool bit = dec.decode(model);
    fields[k].set(i, bit);
    return static_cast<std::size_t>(bit);
  });
  BitString out;
  for (const auto& f : fields) out.append(f);
  return out;
}

}  // namespace revlab::complexity
