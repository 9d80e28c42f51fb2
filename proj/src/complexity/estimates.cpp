#include "revlab/complexity/estimates.hpp"

#include <stdexcept>

namespace revlab::complexity {

ComplexityEstimate khat(const Compressor& comp, const Message& s) {
  return {comp.compress(s).size(), std::string(comp.name()), s.bit_length()};
}

ComplexityEstimate khat_cond(const Compressor& comp, const Message& s, const Message& x) {
  const std::size_t joint = comp.compress(join(x, s)).size();
  const std::size_t given = comp.compress(x).size();
  return {joint > given ? joint - given : 0, std::string(comp.name()), s.bit_length()};
}

long long ik(const Compressor& comp, const Message& x, const Message& y) {
  return static_cast<long long>(khat(comp, x).bits) - static_cast<long long>(khat_cond(comp, x, y).bits);
}

long long cond_ik(const Compressor& comp, const Message& a, const Message& b, const Message& c) {
  return static_cast<long long>(khat_cond(comp, a, c).bits) -
         static_cast<long long>(khat_cond(comp, a, join(b, c)).bits);
}

double incompressibility_score(const Compressor& comp, const Message& s) {
  if (s.bit_length() == 0) throw std::invalid_argument("incompressibility_score: empty subject");
  return static_cast<double>(khat(comp, s).bits) / static_cast<double>(s.bit_length());
}

namespace {

template <typename F>
ComplexityEstimate min_over(std::span<const Compressor* const> comps, F&& f) {
  if (comps.empty()) throw std::invalid_argument("compressor set is empty");
  ComplexityEstimate best = f(*comps[0]);
  for (std::size_t i = 1; i < comps.size(); ++i) {
    ComplexityEstimate e = f(*comps[i]);
    if (e.bits < best.bits) best = std::move(e);
  }
  return best;
}

}  // namespace

ComplexityEstimate khat_min(std::span<const Compressor* const> comps, const Message& s) {
  return min_over(comps, [&](const Compressor& c) { return khat(c, s); });
}

ComplexityEstimate khat_cond_min(std::span<const Compressor* const> comps, const Message& s, const Message& x) {
  return min_over(comps, [&](const Compressor& c) { return khat_cond(c, s, x); });
}

}  // namespace revlab::complexity
