#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "cyclemap/cycle.hpp"
#include "cyclemap/map.hpp"
#include "cyclemap/natural.hpp"

namespace cyclemap {

enum class Classification { ReachesOne, EntersCycle, Undetermined };

// Which bound stopped an Undetermined orbit.
enum class BoundHit { MaxSteps, MaxValueBits };

std::string_view to_string(Classification c);
std::string_view to_string(BoundHit b);
std::optional<Classification> parse_classification(std::string_view text);
std::optional<BoundHit> parse_bound_hit(std::string_view text);

struct Bounds {
  std::uint64_t max_steps = 100000;
  std::uint64_t max_value_bits = 4096;
  bool stop_at_one = true;

  // Default caps; stop_at_one holds for the a*n+1 family, where reaching 1
  // is the question being asked. For other addends (3n+5) the loop through 1
  // is reported as an ordinary cycle.
  static Bounds defaults_for(const MapSpec& map);

  // Throws ValidationError unless max_steps >= 1 and max_value_bits >= 8.
  void validate() const;

  // True when every orbit resolved under *this resolves identically under
  // `other`, i.e. `other` is at least as generous.
  bool covered_by(const Bounds& other) const {
    return stop_at_one == other.stop_at_one && max_steps <= other.max_steps &&
           max_value_bits <= other.max_value_bits;
  }

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

// How much of the trajectory an Orbit keeps.
struct Retention {
  enum class Kind { Full, FirstK, None };
  Kind kind = Kind::Full;
  std::size_t k = 0;

  static Retention full() { return {Kind::Full, 0}; }
  static Retention first(std::size_t k) { return {Kind::FirstK, k}; }
  static Retention none() { return {Kind::None, 0}; }

  std::size_t limit() const;
};

struct Orbit {
  Natural seed;
  Classification classification = Classification::Undetermined;
  // ReachesOne: index of the first 1. EntersCycle: index of the first
  // repeated value (entry_steps + cycle length). Undetermined: index at which
  // the bound fired.
  std::uint64_t steps_to_termination = 0;
  std::optional<Cycle> cycle;
  std::optional<std::uint64_t> entry_steps;
  std::optional<BoundHit> bound_hit;
  Natural peak;
  // prefix[i] is the value after i steps, for i <= steps_to_termination,
  // subject to retention.
  std::vector<Natural> prefix;
  bool prefix_truncated = false;
  // The answer was completed from cached knowledge instead of iteration.
  bool short_circuited = false;

  std::optional<CycleId> cycle_ref() const {
    if (!cycle) return std::nullopt;
    return cycle->id();
  }
};

// What is known about the trajectory starting at some value v, relative to v.
struct KnownTail {
  Classification classification = Classification::Undetermined;
  std::optional<Cycle> cycle;
  std::uint64_t entry_steps = 0;
  std::uint64_t steps_to_termination = 0;
  Natural peak;
  std::optional<BoundHit> bound_hit;
};

// Consulted at every visited index, in index order, until termination. A
// returned tail is used only when it makes the answer identical to plain
// iteration under the same bounds: ReachesOne/EntersCycle tails whose
// combined step count and peak fit the bounds, and Undetermined tails cut by
// the value-bit cap within the step budget. The probe must only offer the
// latter when they were computed under the same max_value_bits. Anything else
// is ignored.
using TailProbe = std::function<std::optional<KnownTail>(std::uint64_t index, const Natural& value)>;

// Iterates seed under map until it reaches 1 (if bounds.stop_at_one), a
// value repeats, or a bound fires. Repetition is found with Brent's
// algorithm, so memory stays constant apart from the retained prefix.
// Throws ValidationError for seed < 1 or invalid bounds.
Orbit classify_orbit(const MapSpec& map, const Natural& seed, const Bounds& bounds,
                     Retention retention = Retention::full(), const TailProbe& probe = {});

// Uses Bounds::defaults_for(map) and full retention.
Orbit classify_orbit(const MapSpec& map, const Natural& seed);

struct DetectedLoop {
  std::vector<Natural> elements;  // trajectory order from the first in-loop value
  std::uint64_t entry_steps = 0;

  friend bool operator==(const DetectedLoop&, const DetectedLoop&) = default;
};

// The loop the trajectory from start falls into within bounds, or nullopt if
// it reaches 1 (with stop_at_one) or exhausts a bound first.
std::optional<DetectedLoop> detect_cycle(const MapSpec& map, const Natural& start,
                                         const Bounds& bounds);
std::optional<DetectedLoop> detect_cycle(const MapSpec& map, const Natural& start);

}  // namespace cyclemap
