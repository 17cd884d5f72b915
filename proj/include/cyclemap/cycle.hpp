#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclemap/map.hpp"
#include "cyclemap/natural.hpp"

namespace cyclemap {

// Identifies a canonical cycle within one map: cycles are disjoint, so the
// minimum element alone is unique; the length is carried for reporting.
struct CycleId {
  Natural min;
  std::size_t length = 0;

  friend bool operator==(const CycleId& l, const CycleId& r) {
    return l.length == r.length && l.min == r.min;
  }
  friend bool operator<(const CycleId& l, const CycleId& r) {
    if (l.min != r.min) return l.min < r.min;
    return l.length < r.length;
  }
};

std::string to_string(const CycleId& id);

// A repeating loop in trajectory order, rotated so that elements[0] is the
// minimum. Construct through canonicalize() unless the elements are already
// known to be canonical.
struct Cycle {
  std::vector<Natural> elements;

  std::size_t length() const { return elements.size(); }
  const Natural& min_element() const { return elements.front(); }
  CycleId id() const { return CycleId{elements.front(), elements.size()}; }

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

// Rotates a loop so that it starts at its minimum element. No validation.
std::vector<Natural> rotate_to_min(std::span<const Natural> loop);

// Index i such that step(map, loop[i]) != loop[(i+1) % size], if any.
std::optional<std::size_t> closure_violation(const MapSpec& map, std::span<const Natural> loop);

// Validates that loop_elements is a genuine loop under map (nonempty, all
// values >= 1, pairwise distinct, step-closed) and returns its canonical
// rotation. Throws ValidationError("loop_elements") otherwise. Idempotent.
Cycle canonicalize(const MapSpec& map, std::span<const Natural> loop_elements);

}  // namespace cyclemap
