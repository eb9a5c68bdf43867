#ifndef NAGATA_RATIONAL_HPP
#define NAGATA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "nagata/errors.hpp"

namespace nagata {

// Exact rational scalars. All arithmetic in the project is exact; there is
// no floating point anywhere.
using Rational = mpq_class;

inline Rational rat_from_string(const std::string& s) {
  try {
    Rational r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::InvalidArgument, "bad rational literal: " + s);
  }
}

inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

inline bool rat_is_integer(const Rational& r) {
  return r.get_den() == 1;
}

}  // namespace nagata

#endif
