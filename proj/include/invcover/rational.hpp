#ifndef INVCOVER_RATIONAL_HPP
#define INVCOVER_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace invcover {

// Exact arithmetic everywhere a feasibility or optimality decision is made.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational &q);

// Accepts "p", "-p", "p/q". Throws Error(InvalidArgument) on malformed text
// or a zero denominator.
Rational parse_rational(const std::string &text);

}  // namespace invcover

#endif
