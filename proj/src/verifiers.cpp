#include "cyclemap/verifiers.hpp"

#include <optional>

#include "cyclemap/errors.hpp"

namespace cyclemap {

void ClaimResult::absorb(const ClaimResult& other) {
  tested_instances += other.tested_instances;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  for (const auto& [k, v] : other.measured_constants) measured_constants.insert_or_assign(k, v);
}

Bounds verifier_bounds() {
  Bounds b;
  b.stop_at_one = false;
  return b;
}

namespace {

std::string describe(const Orbit& o) {
  std::string s(to_string(o.classification));
  if (o.cycle) s += " " + to_string(o.cycle->id());
  if (o.entry_steps) s += " entry_steps=" + std::to_string(*o.entry_steps);
  if (o.bound_hit) s += " bound=" + std::string(to_string(*o.bound_hit));
  return s;
}

const MapSpec& map_5n1() {
  static const MapSpec m = *preset("5n+1");
  return m;
}

const MapSpec& map_3n5() {
  static const MapSpec m = *preset("3n+5");
  return m;
}

}  // namespace

ClaimResult verify_pow2_same_cycle(const MapSpec& map, const Natural& m, std::uint32_t r_max,
                                   const Bounds& bounds) {
  ClaimResult result;
  result.claim_id = "pow2-same-cycle";

  const Orbit base = classify_orbit(map, m, bounds, Retention::none());
  if (base.classification != Classification::EntersCycle || base.entry_steps != 0u) {
    result.failures.push_back({"m=" + to_decimal(m), describe(base), "m on a cycle of " + map.name});
    return result;
  }

  for (std::uint32_t r = 0; r <= r_max; ++r) {
    ++result.tested_instances;
    const Natural n = m << r;
    const std::string input = "m=" + to_decimal(m) + " r=" + std::to_string(r);
    const Orbit o = classify_orbit(map, n, bounds, Retention::first(r + 1));

    if (o.classification != Classification::EntersCycle || !(*o.cycle == *base.cycle)) {
      result.failures.push_back({input, describe(o), "EntersCycle " + to_string(base.cycle->id())});
      continue;
    }
    for (std::uint32_t i = 0; i <= r; ++i) {
      const Natural expected = m << (r - i);
      if (i >= o.prefix.size() || o.prefix[i] != expected) {
        result.failures.push_back({input,
                                   "value after " + std::to_string(i) + " steps = " +
                                       (i < o.prefix.size() ? to_decimal(o.prefix[i]) : "?"),
                                   to_decimal(expected)});
        break;
      }
    }
  }
  return result;
}

ClaimResult verify_pow2_same_cycle_all(const CycleCatalog& catalog, std::uint32_t r_max,
                                       const Bounds& bounds) {
  ClaimResult result;
  result.claim_id = "pow2-same-cycle";
  for (const auto* e : catalog.entries()) {
    for (const auto& m : e->cycle.elements) {
      result.absorb(verify_pow2_same_cycle(catalog.map(), m, r_max, bounds));
    }
  }
  return result;
}

ClaimResult verify_10_pow2_entry(std::uint32_t r_max) {
  ClaimResult result;
  result.claim_id = "10-pow2-entry";
  const CycleCatalog fixtures = known_cycles("5n+1");
  const Cycle* expected = fixtures.find(CycleId{13, 10});

  std::optional<std::int64_t> offset;
  for (std::uint32_t r = 0; r <= r_max; ++r) {
    ++result.tested_instances;
    const Natural n = Natural(10) << r;
    const std::string input = "n=" + to_decimal(n) + " r=" + std::to_string(r);
    const Orbit o = classify_orbit(map_5n1(), n, Bounds::defaults_for(map_5n1()), Retention::none());
    if (o.classification != Classification::EntersCycle || !(*o.cycle == *expected)) {
      result.failures.push_back({input, describe(o), "EntersCycle " + to_string(expected->id())});
      continue;
    }
    const std::int64_t c = static_cast<std::int64_t>(*o.entry_steps) - static_cast<std::int64_t>(r);
    if (!offset) {
      offset = c;
    } else if (c != *offset) {
      result.failures.push_back({input, "entry_steps - r = " + std::to_string(c),
                                 "entry_steps - r = " + std::to_string(*offset)});
    }
  }
  if (offset) result.measured_constants["offset"] = *offset;
  return result;
}

ClaimResult verify_odd_digit_pattern(std::span<const Cycle> cycles) {
  ClaimResult result;
  result.claim_id = "odd-digit-3-or-7";
  for (const auto& c : cycles) {
    for (const auto& v : c.elements) {
      if (is_even(v)) continue;
      ++result.tested_instances;
      const unsigned long digit = mpz_fdiv_ui(v.get_mpz_t(), 10);
      if (digit != 3 && digit != 7) {
        result.failures.push_back({to_decimal(v), "last digit " + std::to_string(digit), "3 or 7"});
      }
    }
  }
  return result;
}

ClaimResult verify_odd_digit_pattern(const CycleCatalog& catalog) {
  std::vector<Cycle> cycles;
  for (const auto* e : catalog.entries()) cycles.push_back(e->cycle);
  return verify_odd_digit_pattern(cycles);
}

ClaimResult verify_multiples_of_5(std::uint64_t limit, std::span<const Natural> extras) {
  if (limit < 5) throw ValidationError("limit", "must be >= 5");
  ClaimResult result;
  result.claim_id = "multiples-of-5";
  const CycleId target{5, 3};

  auto check = [&](const Natural& seed) {
    ++result.tested_instances;
    const Orbit o = classify_orbit(map_3n5(), seed, Bounds::defaults_for(map_3n5()), Retention::none());
    if (o.classification != Classification::EntersCycle || !(o.cycle->id() == target)) {
      result.failures.push_back({"seed=" + to_decimal(seed), describe(o), "EntersCycle " + to_string(target)});
    }
  };
  for (std::uint64_t n = 5; n <= limit; n += 5) check(Natural(static_cast<unsigned long>(n)));
  for (const auto& seed : extras) check(seed);
  return result;
}

ClaimResult verify_correspondence(std::uint64_t k_max, std::uint64_t steps) {
  if (k_max < 1) throw ValidationError("k_max", "must be >= 1");
  if (steps < 1) throw ValidationError("steps", "must be >= 1");
  ClaimResult result;
  result.claim_id = "correspondence-5k";
  const MapSpec collatz = *preset("3n+1");

  Natural x, y, scaled;
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    ++result.tested_instances;
    x = static_cast<unsigned long>(k);
    y = x * 5;
    for (std::uint64_t i = 0; i <= steps; ++i) {
      mpz_mul_ui(scaled.get_mpz_t(), x.get_mpz_t(), 5);
      if (y != scaled) {
        result.failures.push_back({"k=" + std::to_string(k) + " i=" + std::to_string(i),
                                   "3n+5 iterate " + to_decimal(y), to_decimal(scaled)});
        break;
      }
      if (i == steps) break;
      step_in_place(collatz, x);
      step_in_place(map_3n5(), y);
    }
  }
  return result;
}

}  // namespace cyclemap
