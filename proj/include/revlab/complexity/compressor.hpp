#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revlab/complexity/bit_io.hpp"
#include "revlab/core/bitstring.hpp"

namespace revlab::complexity {

/// A bit string read as a sequence of `width`-bit symbols.
struct Field {
  BitString bits;
  unsigned width = 1;

  std::size_t symbols() const { return bits.size() / width; }
  friend bool operator==(const Field&, const Field&) = default;
};

/// Ordered tuple of fields: the unit every compressor encodes. A plain
/// BitString is a one-field message of 1-bit symbols. Tuples carry their own
/// field boundaries in the stream header, which makes concatenation
/// self-delimiting.
class Message {
 public:
  Message() = default;
  Message(BitString bits);  // NOLINT(google-explicit-constructor)
  static Message symbols(BitString bits, unsigned width);
  /// Appends a field; its length must be a multiple of `width`.
  Message& add_field(BitString bits, unsigned width = 1);

  const std::vector<Field>& fields() const { return fields_; }
  std::size_t bit_length() const;
  /// True iff there are >= 2 fields and all have the same symbol count.
  bool aligned() const;
  /// All field bits in order, no padding.
  BitString flatten() const;

  friend Message join(const Message& head, const Message& tail);
  friend bool operator==(const Message&, const Message&) = default;

 private:
  std::vector<Field> fields_;
};

/// Fields of `head` then fields of `tail`; empty fields of `head` are dropped
/// so that join(empty, s) == s.
Message join(const Message& head, const Message& tail);

/// Deterministic, injective compressor. Stream layout (bit-exact, version 1):
///
///   id:4 version:4 gamma(fields+1) { gamma(width) gamma(symbols+1) }* mode:1 payload
///
/// mode 0 stores the flattened bits verbatim; mode 1 carries the
/// compressor-specific payload. Mode 1 is chosen only when strictly shorter,
/// so every stream is at most header_bits() + bit_length() long.
class Compressor {
 public:
  virtual ~Compressor() = default;

  virtual std::string_view name() const = 0;
  virtual std::uint8_t id() const = 0;
  /// Fixed payload framing the coded mode always spends (e.g. an initial
  /// value bit); reported as part of the overhead constant.
  virtual std::size_t framing_bits() const = 0;

  BitString compress(const Message& m) const;
  Message decompress(const BitString& stream) const;

  std::size_t header_bits(const Message& m) const;
  /// Stated overhead bound: compress(m).size() <= bit_length + overhead_bits.
  std::size_t overhead_bits(const Message& m) const { return header_bits(m) + framing_bits(); }

  static constexpr unsigned kVersion = 1;

 protected:
  struct Layout {
    unsigned width;
    std::size_t symbols;
  };
  virtual void encode_payload(const Message& m, BitWriter& out) const = 0;
  virtual BitString decode_payload(BitReader& in, std::span<const Layout> layout) const = 0;
};

/// Run-length: first bit value, then Elias-gamma run lengths for every run
/// but the last (implied by the total length). Messages of two or more fields
/// are coded field by field: a flag bit, then either the raw field bits (0)
/// or its value bit and every run length including the last (1).
class RunLengthCompressor final : public Compressor {
 public:
  std::string_view name() const override { return "rle"; }
  std::uint8_t id() const override { return 1; }
  std::size_t framing_bits() const override { return 1; }

 protected:
  void encode_payload(const Message& m, BitWriter& out) const override;
  BitString decode_payload(BitReader& in, std::span<const Layout> layout) const override;
};

/// Sliding-window dictionary coder over bytes (each field padded to a byte
/// boundary). Window 2^15, minimum match 3, greedy longest-match parse.
/// Tokens: gamma(literals+1), literal bytes, then (offset-1):15 gamma(len-2).
class Lz77Compressor final : public Compressor {
 public:
  static constexpr std::size_t kWindow = std::size_t{1} << 15;
  static constexpr std::size_t kMinMatch = 3;
  static constexpr std::size_t kMaxChain = 1024;

  std::string_view name() const override { return "lz77"; }
  std::uint8_t id() const override { return 2; }
  std::size_t framing_bits() const override { return 0; }

 protected:
  void encode_payload(const Message& m, BitWriter& out) const override;
  BitString decode_payload(BitReader& in, std::span<const Layout> layout) const override;
};

/// Adaptive order-0 binary arithmetic coder (32-bit, Laplace counts halved
/// above 2^16). Symbols wider than one bit are coded through a binary tree,
/// which is order-0 over the symbol alphabet. Aligned multi-field messages
/// are coded record by record over the joint alphabet of one symbol from
/// each field (total record width <= 20); otherwise fields are coded one
/// after another with separate models.
class ArithmeticCompressor final : public Compressor {
 public:
  static constexpr unsigned kMaxRecordWidth = 20;

  std::string_view name() const override { return "arith"; }
  std::uint8_t id() const override { return 3; }
  std::size_t framing_bits() const override { return 2; }

 protected:
  void encode_payload(const Message& m, BitWriter& out) const override;
  BitString decode_payload(BitReader& in, std::span<const Layout> layout) const override;
};

/// The three built-ins in a fixed order: rle, lz77, arith.
std::span<const Compressor* const> builtin_compressors();
/// Throws std::invalid_argument for an unknown name.
const Compressor& compressor_by_name(std::string_view name);

}  // namespace revlab::complexity
