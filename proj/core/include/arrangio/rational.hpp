#pragma once

#include <gmpxx.h>

#include <string>

#include "arrangio/errors.hpp"

namespace arrangio {

// Arbitrary-precision rational, always stored canonicalized:
// gcd(|num|, den) = 1, den > 0, zero is 0/1. mpq_class maintains this
// under arithmetic; parsing canonicalizes explicitly.
using Rational = mpq_class;

// mpq_class's (num, den) constructor stores the pair verbatim; GMP's mpq
// arithmetic silently miscomputes on unreduced values. Every boundary that
// accepts an externally built Rational must pass it through here first.
inline Rational canonicalized(Rational q) {
  if (q.get_den() == 0) {
    throw BadInputFile("zero denominator in rational value");
  }
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den) {
  return canonicalized(Rational(num, den));
}

inline Rational parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) {
    throw BadInputFile("not a rational literal: \"" + s + "\"");
  }
  if (q.get_den() == 0) {
    throw BadInputFile("zero denominator in \"" + s + "\"");
  }
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace arrangio
