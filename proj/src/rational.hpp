// Exact rational scalars on top of GMP.
#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace cdgl {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_from_strings(const std::string& num, const std::string& den) {
  Rat r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace cdgl
