#include "cyclemap/natural.hpp"

#include <stdexcept>

namespace cyclemap {

std::size_t bit_length(const Natural& n) {
  if (sgn(n) == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

std::string to_decimal(const Natural& n) { return n.get_str(10); }

Natural parse_natural(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a non-negative decimal integer: '" + std::string(text) + "'");
    }
  }
  return Natural(std::string(text), 10);
}

std::size_t NaturalHash::operator()(const Natural& n) const noexcept {
  const mpz_srcptr z = n.get_mpz_t();
  const std::size_t limbs = mpz_size(z);
  // FNV-1a over the limbs.
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i)));
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace cyclemap
