#include "cyclemap/orbit.hpp"

#include <algorithm>
#include <limits>

#include "cyclemap/errors.hpp"

namespace cyclemap {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::ReachesOne: return "ReachesOne";
    case Classification::EntersCycle: return "EntersCycle";
    case Classification::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string_view to_string(BoundHit b) {
  switch (b) {
    case BoundHit::MaxSteps: return "max_steps";
    case BoundHit::MaxValueBits: return "max_value_bits";
  }
  return "?";
}

std::optional<Classification> parse_classification(std::string_view text) {
  for (auto c : {Classification::ReachesOne, Classification::EntersCycle,
                 Classification::Undetermined}) {
    if (text == to_string(c)) return c;
  }
  return std::nullopt;
}

std::optional<BoundHit> parse_bound_hit(std::string_view text) {
  if (text == to_string(BoundHit::MaxSteps)) return BoundHit::MaxSteps;
  if (text == to_string(BoundHit::MaxValueBits)) return BoundHit::MaxValueBits;
  return std::nullopt;
}

Bounds Bounds::defaults_for(const MapSpec& map) {
  Bounds b;
  b.stop_at_one = map.b == 1;
  return b;
}

void Bounds::validate() const {
  if (max_steps < 1) throw ValidationError("max_steps", "must be >= 1");
  if (max_value_bits < 8) {
    throw ValidationError("max_value_bits", "must be >= 8, got " + std::to_string(max_value_bits));
  }
}

std::size_t Retention::limit() const {
  switch (kind) {
    case Kind::Full: return std::numeric_limits<std::size_t>::max();
    case Kind::FirstK: return k;
    case Kind::None: return 0;
  }
  return 0;
}

namespace {

std::uint64_t saturating_add(std::uint64_t x, std::uint64_t y) {
  return x > std::numeric_limits<std::uint64_t>::max() - y ? std::numeric_limits<std::uint64_t>::max()
                                                           : x + y;
}

std::uint64_t saturating_mul(std::uint64_t x, std::uint64_t y) {
  if (x != 0 && y > std::numeric_limits<std::uint64_t>::max() / x) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return x * y;
}

struct Trace {
  Orbit orbit;
  // The loop in trajectory order starting at index entry_steps.
  std::vector<Natural> raw_loop;
};

class Tracer {
 public:
  Tracer(const MapSpec& map, const Bounds& bounds, Retention retention, const TailProbe& probe)
      : map_(map), bounds_(bounds), keep_(retention.limit()), probe_(probe) {}

  Trace run(const Natural& seed) {
    Trace t;
    Orbit& o = t.orbit;
    o.seed = seed;
    o.peak = seed;

    if (visit(o, 0, seed)) return finish(std::move(t));

    // Brent: the tortoise parks at indices 2^k - 1, the hare probes the next
    // 2^k indices. Every hare index is visited exactly once and in order.
    Natural tortoise = seed;
    Natural hare = seed;
    std::uint64_t power = 1;
    std::uint64_t lam = 0;
    std::uint64_t index = 0;
    // If the first repeat happens at index <= max_steps, Brent notices it
    // before the hare passes 3 * max_steps + 1.
    const std::uint64_t hare_cap = saturating_add(saturating_mul(bounds_.max_steps, 4), 4);

    while (true) {
      if (power == lam) {
        tortoise = hare;
        power *= 2;
        lam = 0;
      }
      step_in_place(map_, hare);
      ++lam;
      ++index;

      if (index <= bounds_.max_steps) {
        if (visit(o, index, hare)) return finish(std::move(t));
      } else {
        // Past the step budget only a repeat within the budget can still be
        // confirmed. Values that are 1 or exceed the bit cap cannot lie on
        // such a loop, since they would have stopped the walk earlier.
        if ((bounds_.stop_at_one && hare == 1) || bit_length(hare) > bounds_.max_value_bits ||
            index > hare_cap) {
          return finish(undetermined_steps(std::move(t)));
        }
      }

      if (hare == tortoise) break;
    }

    // lam is the loop length; locate the loop start.
    const std::uint64_t loop_len = lam;
    Natural front = seed;
    Natural back = seed;
    for (std::uint64_t i = 0; i < loop_len; ++i) step_in_place(map_, front);
    std::uint64_t mu = 0;
    while (front != back) {
      step_in_place(map_, front);
      step_in_place(map_, back);
      ++mu;
    }

    const std::uint64_t first_repeat = mu + loop_len;
    if (first_repeat > bounds_.max_steps) return finish(undetermined_steps(std::move(t)));

    t.raw_loop.reserve(loop_len);
    for (std::uint64_t i = 0; i < loop_len; ++i) {
      t.raw_loop.push_back(back);
      step_in_place(map_, back);
    }
    o.classification = Classification::EntersCycle;
    o.entry_steps = mu;
    o.steps_to_termination = first_repeat;
    o.cycle = Cycle{rotate_to_min(t.raw_loop)};
    return finish(std::move(t));
  }

 private:
  // Records index/value and returns true once the orbit is resolved.
  bool visit(Orbit& o, std::uint64_t index, const Natural& value) {
    if (value > o.peak) o.peak = value;
    if (o.prefix.size() < keep_) o.prefix.push_back(value);

    if (bounds_.stop_at_one && value == 1) {
      o.classification = Classification::ReachesOne;
      o.steps_to_termination = index;
      return true;
    }
    if (bit_length(value) > bounds_.max_value_bits) {
      o.classification = Classification::Undetermined;
      o.bound_hit = BoundHit::MaxValueBits;
      o.steps_to_termination = index;
      return true;
    }
    if (probe_) {
      if (auto tail = probe_(index, value)) return splice(o, index, *tail);
    }
    return false;
  }

  bool splice(Orbit& o, std::uint64_t index, KnownTail& tail) {
    const std::uint64_t total = saturating_add(index, tail.steps_to_termination);
    if (total > bounds_.max_steps) return false;

    if (tail.classification == Classification::Undetermined) {
      // A repeat anywhere on this walk would have put the oversized value
      // into the prefix already checked, so the cap fires at `total`.
      if (tail.bound_hit != BoundHit::MaxValueBits) return false;
      if (bit_length(tail.peak) <= bounds_.max_value_bits) return false;
      o.classification = Classification::Undetermined;
      o.bound_hit = BoundHit::MaxValueBits;
      o.steps_to_termination = total;
      if (tail.peak > o.peak) o.peak = tail.peak;
      o.short_circuited = true;
      return true;
    }

    if (tail.classification == Classification::EntersCycle && !tail.cycle) return false;
    if (bit_length(tail.peak) > bounds_.max_value_bits) return false;

    o.classification = tail.classification;
    o.steps_to_termination = total;
    if (tail.peak > o.peak) o.peak = tail.peak;
    if (tail.classification == Classification::EntersCycle) {
      o.entry_steps = index + tail.entry_steps;
      o.cycle = std::move(tail.cycle);
    }
    o.short_circuited = true;
    return true;
  }

  Trace undetermined_steps(Trace t) {
    t.orbit.classification = Classification::Undetermined;
    t.orbit.bound_hit = BoundHit::MaxSteps;
    t.orbit.steps_to_termination = bounds_.max_steps;
    return t;
  }

  Trace finish(Trace t) {
    Orbit& o = t.orbit;
    const std::uint64_t visited = o.steps_to_termination + 1;
    if (o.prefix.size() > visited) o.prefix.resize(visited);
    o.prefix_truncated = o.prefix.size() < visited;
    return t;
  }

  const MapSpec& map_;
  const Bounds& bounds_;
  std::size_t keep_;
  const TailProbe& probe_;
};

Trace trace(const MapSpec& map, const Natural& seed, const Bounds& bounds, Retention retention,
            const TailProbe& probe) {
  if (sgn(seed) <= 0) throw ValidationError("seed", "must be >= 1, got " + to_decimal(seed));
  bounds.validate();
  return Tracer(map, bounds, retention, probe).run(seed);
}

}  // namespace

Orbit classify_orbit(const MapSpec& map, const Natural& seed, const Bounds& bounds,
                     Retention retention, const TailProbe& probe) {
  return trace(map, seed, bounds, retention, probe).orbit;
}

Orbit classify_orbit(const MapSpec& map, const Natural& seed) {
  return classify_orbit(map, seed, Bounds::defaults_for(map));
}

std::optional<DetectedLoop> detect_cycle(const MapSpec& map, const Natural& start) {
  return detect_cycle(map, start, Bounds::defaults_for(map));
}

std::optional<DetectedLoop> detect_cycle(const MapSpec& map, const Natural& start,
                                         const Bounds& bounds) {
  if (sgn(start) <= 0) throw ValidationError("start", "must be >= 1, got " + to_decimal(start));
  Trace t = trace(map, start, bounds, Retention::none(), {});
  if (t.orbit.classification != Classification::EntersCycle) return std::nullopt;
  return DetectedLoop{std::move(t.raw_loop), *t.orbit.entry_steps};
}

}  // namespace cyclemap
