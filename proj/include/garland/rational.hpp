#pragma once

// Exact arithmetic helpers on top of GMP. mpq_class is used wherever the
// toolkit promises exact rational results (thresholds, mass formula, Betti
// ranks); floating point never leaks into those paths.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace garland {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// canonical "p/q" rendering, denominator always present ("1/1", "-3/4", ...)
inline std::string rat_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

}  // namespace garland
