#pragma once

// Mod-2 binomial coefficients. Lucas: binom(n, k) is odd iff every
// binary digit of k is dominated by the matching digit of n.

namespace qops {

inline int binom_mod2(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return ((n & k) == k) ? 1 : 0;
}

// Extension to negative upper argument via
//   binom(-m, k) = (-1)^k binom(m+k-1, k),
// needed when an operation index drops below a Steenrod index inside
// the Nishida expansion. binom(n, 0) = 1 for every integer n.
inline int binom_mod2_general(long long n, long long k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (n < 0) return binom_mod2(-n + k - 1, k);
  return binom_mod2(n, k);
}

}  // namespace qops
