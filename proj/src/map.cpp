#include "cyclemap/map.hpp"

#include "cyclemap/errors.hpp"

namespace cyclemap {

namespace {

void check_odd_positive(std::int64_t v, const char* field) {
  if (v < 1) throw ValidationError(field, "must be positive, got " + std::to_string(v));
  if (v % 2 == 0) throw ValidationError(field, "must be odd, got " + std::to_string(v));
}

}  // namespace

MapSpec make_map(std::int64_t a, std::int64_t b, std::string name) {
  check_odd_positive(a, "a");
  check_odd_positive(b, "b");
  if (name.empty()) throw ValidationError("name", "must be nonempty");
  return MapSpec{static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b), std::move(name)};
}

std::optional<MapSpec> preset(std::string_view name) {
  if (name == "3n+1") return MapSpec{3, 1, "3n+1"};
  if (name == "5n+1") return MapSpec{5, 1, "5n+1"};
  if (name == "3n+5") return MapSpec{3, 5, "3n+5"};
  return std::nullopt;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"3n+1", "5n+1", "3n+5"};
  return names;
}

std::string default_name(std::uint64_t a, std::uint64_t b) {
  return std::to_string(a) + "n+" + std::to_string(b);
}

Natural step(const MapSpec& map, const Natural& n) {
  if (sgn(n) <= 0) throw ValidationError("n", "must be >= 1, got " + to_decimal(n));
  Natural next = n;
  step_in_place(map, next);
  return next;
}

}  // namespace cyclemap
