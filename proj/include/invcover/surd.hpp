#ifndef INVCOVER_SURD_HPP
#define INVCOVER_SURD_HPP

#include "invcover/rational.hpp"

#include <compare>

namespace invcover {

// a + b·√2 with rational a, b. Ordering is decided exactly by sign analysis
// and squaring; nothing is ever rounded.
class RationalSqrt2 {
 public:
  RationalSqrt2() = default;
  RationalSqrt2(Rational a) : a_(std::move(a)) {}  // NOLINT: implicit from ℚ
  RationalSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  const Rational &rational_part() const { return a_; }
  const Rational &sqrt2_part() const { return b_; }

  // -1, 0 or 1.
  int sign() const;

  friend RationalSqrt2 operator+(const RationalSqrt2 &x, const RationalSqrt2 &y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend RationalSqrt2 operator-(const RationalSqrt2 &x, const RationalSqrt2 &y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend RationalSqrt2 operator*(const RationalSqrt2 &x, const Rational &q) {
    return {x.a_ * q, x.b_ * q};
  }

  friend bool operator==(const RationalSqrt2 &x, const RationalSqrt2 &y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const RationalSqrt2 &x, const RationalSqrt2 &y) {
    return (x - y).sign() <=> 0;
  }

  // Decimal approximation for human-readable output only.
  double approx() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

}  // namespace invcover

#endif
