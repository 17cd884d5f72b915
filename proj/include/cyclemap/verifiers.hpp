#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cyclemap/catalog.hpp"
#include "cyclemap/map.hpp"
#include "cyclemap/natural.hpp"
#include "cyclemap/orbit.hpp"

namespace cyclemap {

struct ClaimFailure {
  std::string input;
  std::string observed;
  std::string expected;
};

// Outcome of a bounded, exhaustive check of one claim over a finite set of
// instances. Passing is evidence over the tested instances, not a proof.
struct ClaimResult {
  std::string claim_id;
  std::uint64_t tested_instances = 0;
  std::vector<ClaimFailure> failures;
  std::map<std::string, std::int64_t> measured_constants;

  bool passed() const { return failures.empty(); }
  void absorb(const ClaimResult& other);
};

// Bounds used by the verifiers unless told otherwise: default caps, with the
// walk continuing through 1 so the loop containing 1 is observable.
Bounds verifier_bounds();

// For r = 0..r_max: m * 2^r halves r times down to m and lands in the same
// canonical cycle as m. m must lie on a cycle of map.
ClaimResult verify_pow2_same_cycle(const MapSpec& map, const Natural& m, std::uint32_t r_max,
                                   const Bounds& bounds = verifier_bounds());

// verify_pow2_same_cycle for every element of every cataloged cycle.
ClaimResult verify_pow2_same_cycle_all(const CycleCatalog& catalog, std::uint32_t r_max,
                                       const Bounds& bounds = verifier_bounds());

// Under 5n+1, 10 * 2^r enters the cycle through 13 for r = 0..r_max. The
// entry step count is measured per r; the claim fails only if
// entry_steps - r varies with r. The common offset is reported as "offset".
ClaimResult verify_10_pow2_entry(std::uint32_t r_max);

// Every odd element of every cycle ends in the digit 3 or 7.
ClaimResult verify_odd_digit_pattern(std::span<const Cycle> cycles);
ClaimResult verify_odd_digit_pattern(const CycleCatalog& catalog);

// Under 3n+5, every multiple of 5 up to limit, and every extra seed, enters
// the cycle [5, 20, 10].
ClaimResult verify_multiples_of_5(std::uint64_t limit, std::span<const Natural> extras = {});

// For k = 1..k_max and i = 0..steps: the i-th 3n+5 iterate of 5k equals five
// times the i-th 3n+1 iterate of k. Both walks continue through 1.
ClaimResult verify_correspondence(std::uint64_t k_max, std::uint64_t steps);

}  // namespace cyclemap
