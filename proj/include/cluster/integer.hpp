#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <string>

namespace cluster {

using Integer = mpz_class;

inline std::size_t hash_value(const Integer& x) {
  const mpz_srcptr z = x.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(z->_mp_size);
  const int limbs = z->_mp_size < 0 ? -z->_mp_size : z->_mp_size;
  for (int i = 0; i < limbs; ++i) {
    h ^= std::hash<mp_limb_t>{}(z->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

/// Exponent-sized conversion; matrix entries large enough to overflow this are
/// far outside anything a Laurent polynomial could be built from.
int to_exponent(const Integer& x);

}  // namespace cluster
