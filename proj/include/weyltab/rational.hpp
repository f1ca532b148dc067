#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace weyltab {

// Exact scalar used everywhere: roots have integer coordinates, weights
// rational ones.  No floating point anywhere in the library.
using Rat = boost::rational<long long>;

// Weight in explicit epsilon-coordinates.
using Weight = std::vector<Rat>;

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

std::string weight_to_string(const Weight& w);

inline Rat frac_part(const Rat& r) {
  // representative in [0,1)
  long long num = r.numerator(), den = r.denominator();
  long long q = num / den;
  if (num % den != 0 && num < 0) --q;
  return r - Rat(q);
}

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

}  // namespace weyltab
