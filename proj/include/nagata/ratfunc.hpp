#ifndef NAGATA_RATFUNC_HPP
#define NAGATA_RATFUNC_HPP

#include <string>

#include "nagata/poly.hpp"

namespace nagata {

// Element of F(z), stored reduced with monic denominator, so equality is
// structural. Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::one()) {}
  explicit RatFunc(const Rational& c) : num_(c), den_(Poly::one()) {}
  explicit RatFunc(const Poly& p) : num_(p), den_(Poly::one()) {}
  RatFunc(const Poly& num, const Poly& den);

  static RatFunc z() { return RatFunc(Poly::z()); }
  static RatFunc one() { return RatFunc(Rational(1)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  Rational as_rational() const;
  const Poly& as_poly() const;

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc inverse() const;
  RatFunc pow(int e) const;

  // Order of vanishing at z = a; negative at a pole, kValPosInf for 0.
  int valuation_at(const Rational& a) const;
  // Substitution z -> z + c.
  RatFunc shifted(const Rational& c) const;
  // Evaluation at z = a; throws PoleHit if a is a pole.
  Rational eval(const Rational& a) const;

  static int compare(const RatFunc& a, const RatFunc& b);

  std::string to_string() const;

 private:
  Poly num_, den_;
};

inline bool operator<(const RatFunc& a, const RatFunc& b) {
  return RatFunc::compare(a, b) < 0;
}

}  // namespace nagata

#endif
