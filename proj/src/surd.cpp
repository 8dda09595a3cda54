#include "invcover/surd.hpp"

#include <cmath>

namespace invcover {

int RationalSqrt2::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| against |b|·√2, decided by squares.
  const int cmp = ::cmp(Rational(a_ * a_), Rational(2 * b_ * b_));
  // a² = 2b² has no rational solution with b ≠ 0, so cmp is never zero.
  return cmp > 0 ? sa : sb;
}

double RationalSqrt2::approx() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

}  // namespace invcover
