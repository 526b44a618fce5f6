#include <doctest.h>

#include "oracles.hpp"
#include "qops/f2.hpp"

using namespace qops;

TEST_CASE("lucas rule on small pinned values") {
  CHECK(binom_mod2(3, 1) == 1);
  CHECK(binom_mod2(2, 1) == 0);
  CHECK(binom_mod2(13, 4) == 1);
  CHECK(binom_mod2(5, 7) == 0);
}

TEST_CASE("agrees with factorial parity up to 20") {
  for (long n = 0; n <= 20; ++n) {
    unsigned long long row = 1;
    for (long k = 0; k <= n; ++k) {
      CHECK(binom_mod2(n, k) == static_cast<int>(row & 1));
      row = row * static_cast<unsigned long long>(n - k) /
            static_cast<unsigned long long>(k + 1);
    }
  }
}

TEST_CASE("agrees with the power-series oracle") {
  for (long n = 0; n <= 64; ++n)
    for (long k = 0; k <= 64; ++k)
      CHECK(binom_mod2(n, k) == oracle::binom2(n, k));
}

TEST_CASE("symmetry and edge rows") {
  for (long n = 0; n <= 40; ++n) {
    CHECK(binom_mod2(n, 0) == 1);
    for (long k = 0; k <= n; ++k)
      CHECK(binom_mod2(n, k) == binom_mod2(n, n - k));
  }
  CHECK(binom_mod2(10, -2) == 0);
}

TEST_CASE("negative upper argument extension") {
  for (long n = -40; n <= 40; ++n) {
    CHECK(binom_mod2_general(n, 0) == 1);
    for (long k = 1; k <= 40; ++k)
      CHECK(binom_mod2_general(n, k) == oracle::binom2(n, k));
  }
}
