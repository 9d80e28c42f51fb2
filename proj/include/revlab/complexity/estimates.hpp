#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "revlab/complexity/compressor.hpp"

namespace revlab::complexity {

/// Compressed length of a subject: an upper bound on its complexity up to
/// the compressor's overhead_bits().
struct ComplexityEstimate {
  std::size_t bits = 0;
  std::string compressor;
  std::size_t subject_length = 0;
};

ComplexityEstimate khat(const Compressor& comp, const Message& s);

/// max(0, khat(join(x, s)) - khat(x)).
ComplexityEstimate khat_cond(const Compressor& comp, const Message& s, const Message& x);

/// khat(x) - khat(x | y). Reported raw; may dip below zero from overhead.
long long ik(const Compressor& comp, const Message& x, const Message& y);

/// khat(a | c) - khat(a | join(b, c)).
long long cond_ik(const Compressor& comp, const Message& a, const Message& b, const Message& c);

/// khat(s) / len(s). Throws std::invalid_argument on an empty subject.
double incompressibility_score(const Compressor& comp, const Message& s);

/// Smallest estimate over a nonempty set of compressors.
ComplexityEstimate khat_min(std::span<const Compressor* const> comps, const Message& s);
ComplexityEstimate khat_cond_min(std::span<const Compressor* const> comps, const Message& s, const Message& x);

}  // namespace revlab::complexity
