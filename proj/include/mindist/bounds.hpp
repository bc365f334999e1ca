#pragma once

// Classical rate bounds for binary codes, finite-length and asymptotic.

#include "mindist/types.hpp"

namespace mindist {

/// H(q) = -q log2 q - (1-q) log2 (1-q), with H(0) = H(1) = 0.
double binary_entropy(double q);

/// log2( sum_{i=0..t} C(n, i) ), accumulated in exact integer arithmetic.
double log2_binomial_sum(int n, int t);

/// Gilbert-Varshamov lower bound 1 - log2(sum_{i<d} C(n,i))/n, clamped at 0.
Rate gilbert_finite(int n, int d);

/// Sphere-packing upper bound with radius floor((d-1)/2).
Rate hamming_finite(int n, int d);

/// (1/n) [1 - log2(2 - 1/delta)] for 1/2 < delta <= 1.5, capped at 1.
Rate plotkin_finite(int n, NormalizedDistance delta);

/// Asymptotic GV, Hamming, MRRW or the (2 delta - 1)^2 model.
/// Throws std::invalid_argument for a finite-regime kind.
Rate asymptotic_bound(BoundKind kind, NormalizedDistance delta);

}  // namespace mindist
