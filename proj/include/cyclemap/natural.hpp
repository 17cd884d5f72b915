#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cyclemap {

// Arbitrary-precision non-negative integer used for every orbit value.
using Natural = mpz_class;

// Number of significant bits; 0 has bit length 0.
std::size_t bit_length(const Natural& n);

std::string to_decimal(const Natural& n);

// Parses a plain base-10 string of digits. Throws std::invalid_argument on
// empty input, signs, whitespace or any non-digit character.
Natural parse_natural(std::string_view text);

inline bool is_even(const Natural& n) { return mpz_even_p(n.get_mpz_t()) != 0; }
inline bool is_odd(const Natural& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

struct NaturalHash {
  std::size_t operator()(const Natural& n) const noexcept;
};

}  // namespace cyclemap
