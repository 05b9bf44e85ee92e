#include <catch2/catch_amalgamated.hpp>

#include "tileperm/bigint.hpp"

using tileperm::BigUint;
using tileperm::binomial;

TEST_CASE("small arithmetic agrees with machine words") {
  std::uint64_t values[] = {0, 1, 7, 999999999, 1000000000, 123456789012345ull};
  for (auto a : values)
    for (auto b : values) {
      CHECK((BigUint(a) + BigUint(b)).str() == std::to_string(a + b));
      if (a < (1ull << 32) && b < (1ull << 32))
        CHECK((BigUint(a) * BigUint(b)).str() == std::to_string(a * b));
      CHECK((BigUint(a) < BigUint(b)) == (a < b));
      CHECK((BigUint(a) == BigUint(b)) == (a == b));
    }
}

TEST_CASE("exact division") {
  BigUint x = BigUint(123456789) * BigUint(1000003);
  CHECK(x.div_exact(1000003).str() == "123456789");
  CHECK_THROWS_AS(BigUint(10).div_exact(3), tileperm::error);
}

TEST_CASE("binomials") {
  CHECK(binomial(10, 3).str() == "120");
  CHECK(binomial(0, 0).str() == "1");
  CHECK(binomial(5, 7).str() == "0");
  CHECK(binomial(52, 26).str() == "495918532948104");
  // Pascal identity on a band of larger values.
  for (int n = 1; n < 80; ++n)
    for (int k : {1, 2, 5, n / 2, n - 1}) {
      if (k < 1 || k > n) continue;
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
}

TEST_CASE("u64 round trip and overflow detection") {
  CHECK(BigUint(18446744073709551615ull).to_u64() == 18446744073709551615ull);
  BigUint big = BigUint(18446744073709551615ull) * BigUint(2);
  CHECK_THROWS_AS(big.to_u64(), tileperm::error);
}
