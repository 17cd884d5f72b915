#include "cyclemap/cycle.hpp"

#include <algorithm>
#include <unordered_set>

#include "cyclemap/errors.hpp"

namespace cyclemap {

std::string to_string(const CycleId& id) {
  return "cycle(min=" + to_decimal(id.min) + ", len=" + std::to_string(id.length) + ")";
}

std::vector<Natural> rotate_to_min(std::span<const Natural> loop) {
  std::vector<Natural> out(loop.begin(), loop.end());
  if (out.empty()) return out;
  auto it = std::min_element(out.begin(), out.end());
  std::rotate(out.begin(), it, out.end());
  return out;
}

std::optional<std::size_t> closure_violation(const MapSpec& map, std::span<const Natural> loop) {
  for (std::size_t i = 0; i < loop.size(); ++i) {
    if (sgn(loop[i]) <= 0) return i;
    Natural next = loop[i];
    step_in_place(map, next);
    if (next != loop[(i + 1) % loop.size()]) return i;
  }
  return std::nullopt;
}

Cycle canonicalize(const MapSpec& map, std::span<const Natural> loop_elements) {
  if (loop_elements.empty()) throw ValidationError("loop_elements", "empty loop");
  std::unordered_set<Natural, NaturalHash> seen;
  for (const auto& v : loop_elements) {
    if (sgn(v) <= 0) throw ValidationError("loop_elements", "non-positive value " + to_decimal(v));
    if (!seen.insert(v).second) {
      throw ValidationError("loop_elements", "duplicate value " + to_decimal(v));
    }
  }
  if (auto bad = closure_violation(map, loop_elements)) {
    const auto& v = loop_elements[*bad];
    throw ValidationError("loop_elements",
                          "not closed under " + map.name + ": step(" + to_decimal(v) + ") = " +
                              to_decimal(step(map, v)) + " but next element is " +
                              to_decimal(loop_elements[(*bad + 1) % loop_elements.size()]));
  }
  return Cycle{rotate_to_min(loop_elements)};
}

}  // namespace cyclemap
