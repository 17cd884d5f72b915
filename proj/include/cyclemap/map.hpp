#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclemap/natural.hpp"

namespace cyclemap {

// The map n -> n/2 (n even), n -> a*n + b (n odd), with a and b both odd so
// that every odd step lands on an even value.
struct MapSpec {
  std::uint64_t a = 3;
  std::uint64_t b = 1;
  std::string name = "3n+1";

  friend bool operator==(const MapSpec&, const MapSpec&) = default;

  // Same dynamics; the label is not compared.
  bool same_dynamics(const MapSpec& other) const { return a == other.a && b == other.b; }
};

// Throws ValidationError naming "a", "b" or "name".
MapSpec make_map(std::int64_t a, std::int64_t b, std::string name);

// "3n+1", "5n+1" and "3n+5".
std::optional<MapSpec> preset(std::string_view name);
const std::vector<std::string>& preset_names();

// Default label for a custom pair, e.g. "7n+3".
std::string default_name(std::uint64_t a, std::uint64_t b);

// One application of the map. Throws ValidationError("n") for n < 1.
Natural step(const MapSpec& map, const Natural& n);

// In-place variant for hot loops; the caller guarantees n >= 1.
inline void step_in_place(const MapSpec& map, Natural& n) {
  if (is_even(n)) {
    mpz_fdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(), 1);
  } else {
    mpz_mul_ui(n.get_mpz_t(), n.get_mpz_t(), map.a);
    mpz_add_ui(n.get_mpz_t(), n.get_mpz_t(), map.b);
  }
}

}  // namespace cyclemap
