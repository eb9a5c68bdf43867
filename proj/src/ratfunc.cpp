#include "nagata/ratfunc.hpp"

#include <sstream>

#include "nagata/errors.hpp"

namespace nagata {

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw division_by_zero("rational function");
  if (num_.is_zero()) {
    den_ = Poly::one();
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = Poly::exact_div(num_, g);
    den_ = Poly::exact_div(den_, g);
  }
  Rational lead = den_.leading_coeff();
  if (lead != 1) {
    den_ = den_.scaled(1 / lead);
    num_ = num_.scaled(1 / lead);
  }
}

Rational RatFunc::as_rational() const {
  if (!is_constant())
    throw Error(ErrorCode::InvalidArgument, "not a constant: " + to_string());
  return num_.constant_term();
}

const Poly& RatFunc::as_poly() const {
  if (!is_polynomial())
    throw Error(ErrorCode::InvalidArgument,
                "not a polynomial: " + to_string());
  return num_;
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw division_by_zero("F(z) division");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw division_by_zero("F(z) inverse");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r = RatFunc::one();
  RatFunc base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

namespace {
// Multiplicity of (z - a) in p, p nonzero.
int root_multiplicity(const Poly& p, const Rational& a) {
  int m = 0;
  Poly cur = p;
  const Poly lin = Poly::z() - Poly(a);
  while (cur.eval(a) == 0) {
    cur = Poly::exact_div(cur, lin);
    ++m;
  }
  return m;
}
}  // namespace

int RatFunc::valuation_at(const Rational& a) const {
  if (is_zero()) return kValPosInf;
  return root_multiplicity(num_, a) - root_multiplicity(den_, a);
}

RatFunc RatFunc::shifted(const Rational& c) const {
  return RatFunc(num_.shifted(c), den_.shifted(c));
}

Rational RatFunc::eval(const Rational& a) const {
  Rational d = den_.eval(a);
  if (d == 0)
    throw Error(ErrorCode::PoleHit, "evaluation at pole z = " + a.get_str());
  return num_.eval(a) / d;
}

int RatFunc::compare(const RatFunc& a, const RatFunc& b) {
  int c = Poly::compare(a.den_, b.den_);
  if (c != 0) return c;
  return Poly::compare(a.num_, b.num_);
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  std::ostringstream os;
  const bool num_atom =
      num_.coeffs().size() == 1 && num_.leading_coeff() > 0;
  if (num_atom)
    os << num_.to_string();
  else
    os << "(" << num_.to_string() << ")";
  os << "/";
  const bool den_atom = den_.coeffs().size() == 1;
  if (den_atom && den_.degree() <= 1)
    os << den_.to_string();
  else
    os << "(" << den_.to_string() << ")";
  return os.str();
}

}  // namespace nagata
