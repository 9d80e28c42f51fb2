#pragma once

#include <cstdint>

#include "revlab/combinatorics/rational.hpp"

namespace revlab::combinatorics {

/// C(n, k); zero outside 0 <= k <= n. Throws std::domain_error for n < 0.
BigInt exact_binom(long long n, long long k);

/// Injectivity upper bound on the probability that a conservative reversible
/// map moves a uniformly drawn string of half-weight couple [wn, (1-w)n] to
/// [(w+delta)n, (1-w-delta)n]:
///
///   C(n,(w+delta)n) C(n,(1-w-delta)n) / (C(n,wn) C(n,(1-w)n))
///
/// With `tail` set the sum over every delta' >= delta (step 1/n) is returned,
/// i.e. the bound for "this couple or a more extreme one".
/// Requires 1/2 <= w < 1, 0 < delta <= 1 - w, and wn, delta n integral.
ExactRational imbalance_bound(long long n, const ExactRational& w, const ExactRational& delta, bool tail);

/// C(N-n, w-n) / C(N, w): bound on a conservative reversible map sending a
/// weight-w string of length N to one whose first n bits are all 1.
/// Returns 0 when n > w. Requires 0 <= n <= N and 0 <= w <= N.
ExactRational concentration_bound(long long length, long long weight, long long n);

/// h(p) = -p log2 p - (1-p) log2 (1-p), with h(0) = h(1) = 0.
double binary_entropy(double p);

/// h(c/m^2) < 1/(3m). Requires m >= 2, c > 0, c/m^2 <= 1/2.
bool entropy_gap_holds(long long m, double c);

/// Least m >= 2 (and with c/m^2 <= 1/2) such that entropy_gap_holds(m', c)
/// for every m' in [m, 4m]. Throws std::runtime_error if none below 10^6.
long long entropy_gap_threshold(double c);

}  // namespace revlab::combinatorics
