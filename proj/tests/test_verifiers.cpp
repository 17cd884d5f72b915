#include <doctest.h>

#include "cyclemap/verifiers.hpp"
#include "oracle.hpp"

using namespace cyclemap;

TEST_CASE("pow2 same-cycle theorem on the two 5n+1 cycles") {
  const MapSpec map = *preset("5n+1");
  const ClaimResult thirteen = verify_pow2_same_cycle(map, Natural(13), 10);
  CHECK(thirteen.passed());
  CHECK(thirteen.tested_instances == 11);
  CHECK(verify_pow2_same_cycle(map, Natural(17), 10).passed());
  CHECK(verify_pow2_same_cycle(map, Natural(13), 0).passed());

  // 13 * 2^10 = 13312 halves ten times to 13.
  const auto ref = oracle::naive(5, 1, 13312);
  CHECK(*ref.entry <= 10);
  CHECK(ref.history[10] == 13);

  const ClaimResult all = verify_pow2_same_cycle_all(known_cycles("5n+1"), 20);
  CHECK(all.passed());
  CHECK(all.tested_instances == 20 * 21);
}

TEST_CASE("pow2 verifier reports a non-cycle member as a failure") {
  const ClaimResult r = verify_pow2_same_cycle(*preset("5n+1"), Natural(5), 3);
  CHECK_FALSE(r.passed());
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].input == "m=5");
}

TEST_CASE("10 * 2^r entry theorem: constant measured offset") {
  const ClaimResult r = verify_10_pow2_entry(6);
  CHECK(r.passed());
  CHECK(r.tested_instances == 7);
  // 10 -> 5 -> 26 and 26 is on the cycle.
  REQUIRE(r.measured_constants.count("offset"));
  CHECK(r.measured_constants.at("offset") == 2);
  for (unsigned r_ = 0; r_ <= 6; ++r_) {
    const auto ref = oracle::naive(5, 1, mpz_class(10) << r_);
    CHECK(*ref.entry == r_ + 2);
    CHECK(ref.cycle.front() == 13);
  }
}

TEST_CASE("odd elements of the 5n+1 cycles end in 3 or 7") {
  const ClaimResult r = verify_odd_digit_pattern(known_cycles("5n+1"));
  CHECK(r.passed());
  CHECK(r.tested_instances == 6);  // 13, 33, 83 and 17, 43, 27

  std::vector<Cycle> forged{Cycle{oracle::ints({13, 66, 33})}, Cycle{oracle::ints({15, 76})}};
  const ClaimResult bad = verify_odd_digit_pattern(forged);
  REQUIRE(bad.failures.size() == 1);
  CHECK(bad.failures[0].input == "15");
}

TEST_CASE("multiples of 5 fall into [5, 20, 10] under 3n+5") {
  const std::vector<Natural> extras{Natural(225), Natural(17585), Natural(3698450)};
  const ClaimResult r = verify_multiples_of_5(35, extras);
  CHECK(r.passed());
  CHECK(r.tested_instances == 10);
  CHECK(verify_multiples_of_5(2000).passed());

  const std::vector<Natural> not_multiple{Natural(23)};
  const ClaimResult bad = verify_multiples_of_5(5, not_multiple);
  CHECK(bad.failures.size() == 1);
  CHECK_THROWS(verify_multiples_of_5(4));
}

TEST_CASE("3n+5 from 5k is five times 3n+1 from k") {
  CHECK(verify_correspondence(200, 300).passed());
  const ClaimResult r = verify_correspondence(7, 4);
  CHECK(r.tested_instances == 7);
  CHECK(r.passed());

  // Independent spot check of k = 7.
  auto x = oracle::naive(3, 1, 7, 4, 4096, false).history;
  auto y = oracle::naive(3, 5, 35, 4, 4096, false).history;
  CHECK(x == oracle::ints({7, 22, 11, 34, 17}));
  CHECK(y == oracle::ints({35, 110, 55, 170, 85}));
  CHECK(oracle::naive(3, 1, 2, 1, 4096, false).history == oracle::ints({2, 1}));
  CHECK(oracle::naive(3, 5, 10, 1, 4096, false).history == oracle::ints({10, 5}));
  CHECK(oracle::naive(3, 5, 5, 3, 4096, false).history == oracle::ints({5, 20, 10, 5}));
}
