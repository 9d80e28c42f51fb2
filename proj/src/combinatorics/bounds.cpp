#include "revlab/combinatorics/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace revlab::combinatorics {

BigInt exact_binom(long long n, long long k) {
  if (n < 0) throw std::domain_error("exact_binom: negative n");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) here
  }
  return r;
}

namespace {

long long integral_product(const ExactRational& r, long long n, const char* what) {
  const ExactRational p = r * ExactRational(n);
  if (!p.is_integer()) {
    throw std::domain_error(std::string("imbalance_bound: ") + what + " * n is not an integer");
  }
  return p.numerator().convert_to<long long>();
}

}  // namespace

ExactRational imbalance_bound(long long n, const ExactRational& w, const ExactRational& delta, bool tail) {
  if (n <= 0) throw std::domain_error("imbalance_bound: n must be positive");
  if (w < ExactRational(1, 2) || w >= ExactRational(1)) throw std::domain_error("imbalance_bound: need 1/2 <= w < 1");
  if (delta <= ExactRational(0) || delta > ExactRational(1) - w) {
    throw std::domain_error("imbalance_bound: need 0 < delta <= 1 - w");
  }
  const long long heavy = integral_product(w, n, "w");
  const long long shift = integral_product(delta, n, "delta");
  const long long light = n - heavy;

  const BigInt source = exact_binom(n, heavy) * exact_binom(n, light);
  BigInt target = 0;
  const long long last = tail ? light : shift;
  for (long long d = shift; d <= last; ++d) target += exact_binom(n, heavy + d) * exact_binom(n, light - d);
  return ExactRational(target, source);
}

ExactRational concentration_bound(long long length, long long weight, long long n) {
  if (length < 0 || weight < 0 || n < 0) throw std::domain_error("concentration_bound: negative argument");
  if (weight > length) throw std::domain_error("concentration_bound: weight exceeds length");
  if (n > length) throw std::domain_error("concentration_bound: n exceeds length");
  if (n > weight) return ExactRational(0);
  return ExactRational(exact_binom(length - n, weight - n), exact_binom(length, weight));
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binary_entropy: p outside [0, 1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

bool entropy_gap_holds(long long m, double c) {
  if (m < 2) throw std::domain_error("entropy_gap_holds: m must be >= 2");
  if (!(c > 0.0)) throw std::domain_error("entropy_gap_holds: c must be positive");
  const double md = static_cast<double>(m);
  const double p = c / (md * md);
  if (p > 0.5) throw std::domain_error("entropy_gap_holds: c/m^2 exceeds 1/2");
  return binary_entropy(p) < 1.0 / (3.0 * md);
}

long long entropy_gap_threshold(double c) {
  if (!(c > 0.0)) throw std::domain_error("entropy_gap_threshold: c must be positive");
  constexpr long long kLimit = 1'000'000;
  long long start = 2;
  while (c / static_cast<double>(start * start) > 0.5) ++start;
  // run = length of the current streak of consecutive m' where the gap holds
  long long run_start = -1;
  for (long long m = start; m <= 4 * kLimit; ++m) {
    if (entropy_gap_holds(m, c)) {
      if (run_start < 0) run_start = m;
      if (m >= 4 * run_start) return run_start;
    } else {
      run_start = -1;
      if (m > kLimit) break;
    }
  }
  throw std::runtime_error("entropy_gap_threshold: no threshold below 10^6");
}

}  // namespace revlab::combinatorics
