#ifndef NAGATA_POLY_HPP
#define NAGATA_POLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nagata/rational.hpp"

namespace nagata {

// Degree of the zero polynomial / zero element. Chosen so that it stays
// absorbing under the additions that occur in degree bookkeeping.
constexpr int kDegNegInf = INT_MIN / 4;
// Valuation of the zero rational function.
constexpr int kValPosInf = INT_MAX / 4;

// Sparse univariate polynomial in z over the rationals. No zero
// coefficients are stored; the empty map is the zero polynomial.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& c) {
    if (c != 0) coeffs_[0] = c;
  }
  Poly(const Rational& c, int exp) {
    if (c != 0) coeffs_[exp] = c;
  }
  static Poly z() { return Poly(Rational(1), 1); }
  static Poly one() { return Poly(Rational(1)); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const {
    return coeffs_.empty() ||
           (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
  }
  bool is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
           coeffs_.begin()->second == 1;
  }

  // kDegNegInf for the zero polynomial.
  int degree() const {
    return coeffs_.empty() ? kDegNegInf : coeffs_.rbegin()->first;
  }

  Rational coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }
  Rational leading_coeff() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.rbegin()->second;
  }
  Rational constant_term() const { return coeff(0); }

  const std::map<int, Rational>& coeffs() const { return coeffs_; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly scaled(const Rational& c) const;
  Poly pow(int e) const;

  // Quotient and remainder; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Exact division; throws if the remainder is nonzero.
  static Poly exact_div(const Poly& a, const Poly& b);
  // Monic gcd; gcd(0,0) = 0.
  static Poly gcd(const Poly& a, const Poly& b);
  // Monic lcm; lcm with 0 is 0.
  static Poly lcm(const Poly& a, const Poly& b);

  Poly monic() const;
  Poly derivative() const;
  // Substitution z -> z + c.
  Poly shifted(const Rational& c) const;
  Rational eval(const Rational& a) const;

  // Rational roots, each with multiplicity, sorted ascending.
  std::vector<std::pair<Rational, int>> rational_roots() const;

  // Total order for canonical term ordering: by degree, then by
  // coefficients from the highest exponent down.
  static int compare(const Poly& a, const Poly& b);

  std::string to_string() const;

 private:
  void set_coeff(int exp, const Rational& c) {
    if (c == 0)
      coeffs_.erase(exp);
    else
      coeffs_[exp] = c;
  }

  std::map<int, Rational> coeffs_;
};

inline bool operator<(const Poly& a, const Poly& b) {
  return Poly::compare(a, b) < 0;
}

}  // namespace nagata

#endif
