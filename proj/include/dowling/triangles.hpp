#pragma once

#include "dowling/rational.hpp"

namespace dowling {

// All (n, k)-indexed families below are memoized for the lifetime of the
// process; the caches are internally synchronized (reads may run
// concurrently, rows are built once under a lock and never change).

// Stirling numbers of the second kind, S(n,k) = S(n-1,k-1) + k S(n-1,k),
// S(0,0) = 1.  Counts partitions of an n-set into k nonempty blocks.
Integer stirling2(unsigned n, unsigned k);

// Translated Whitney numbers of the second kind, m^{n-k} S(n,k).
Rational translated_whitney(const Rational& m, unsigned n, unsigned k);

// The same numbers through the alternating sum
//   (1 / (m^k k!)) * sum_j (-1)^{k-j} C(k,j) (m j)^n.
// Kept as an independent route for cross-checking; requires m != 0.
Rational translated_whitney_explicit(const Rational& m, unsigned n,
                                     unsigned k);

// Noncentral Whitney numbers of the second kind.  Computed by the triangular
// recurrence
//   W(n,k) = W(n-1,k-1) + (m k - a) W(n-1,k),   W(0,0) = 1,
// which is validated in the tests against the binomial-Stirling sum below
// before being relied on.  Requires m != 0.
Rational noncentral_whitney(const Rational& m, const Rational& a, unsigned n,
                            unsigned k);

// Independent route to the same numbers:
//   sum_j C(n,j) (-a)^{n-j} m^{j-k} S(j,k)
// (only j >= k contributes, so only nonnegative powers of m occur).
Rational noncentral_whitney_sum(const Rational& m, const Rational& a,
                                unsigned n, unsigned k);

// Whitney numbers of the second kind of Dowling lattices; the noncentral
// family at a = -1.  Requires m != 0.
Rational whitney(const Rational& m, unsigned n, unsigned k);

}  // namespace dowling
