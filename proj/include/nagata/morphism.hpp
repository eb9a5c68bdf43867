#ifndef NAGATA_MORPHISM_HPP
#define NAGATA_MORPHISM_HPP

#include <array>
#include <vector>

#include "nagata/freealg.hpp"

namespace nagata {

// Q-endomorphism of F(z) * F<x,y> fixing z, given by the images of x, y.
// Being an automorphism is a separate, verified property, never assumed.
struct Endo {
  NCElement image_x, image_y;
  static Endo identity() { return {NCElement::x(), NCElement::y()}; }
  bool operator==(const Endo& o) const {
    return image_x == o.image_x && image_y == o.image_y;
  }
};

NCElement apply(const Endo& e, const NCElement& a);
// (outer . inner)(t) = outer(inner(t)); image_x = apply(outer, inner.image_x).
Endo compose(const Endo& outer, const Endo& inner);
bool is_z_polynomial(const Endo& e);
CommEndo abelianize_endo(const Endo& e);

// Sum of coefficient-decorated monomials in one letter:
// each summand (q0,...,qm) denotes q0 v q1 v ... v qm.
struct TailSummand {
  std::vector<RatFunc> coeffs;  // m + 1 entries, m >= 1 letters
  int letters() const { return int(coeffs.size()) - 1; }
};

struct TailForm {
  std::vector<TailSummand> summands;
  bool empty() const { return summands.empty(); }
  int max_letters() const;
  int min_letters() const;
  NCElement materialize(Letter v) const;
  TailForm scaled(const RatFunc& left, const RatFunc& right) const;
  TailForm negated() const;
};

// The alternating elementary types plus two-sided scalings and left-linear
// maps. Transvection tails in a decomposition have letter count >= 2;
// degree-one parts travel through Scale / LinearLeft.
struct ElementaryAuto {
  enum class Kind { TransvectY, TransvectX, Scale, LinearLeft };
  Kind kind = Kind::Scale;
  // TransvectY: x -> x, y -> r y r' + tail(x); TransvectX symmetric.
  RatFunc r = RatFunc::one(), rp = RatFunc::one();
  TailForm tail;
  // Scale: x -> p1 x q1, y -> p2 y q2.
  RatFunc p1 = RatFunc::one(), q1 = RatFunc::one(), p2 = RatFunc::one(),
          q2 = RatFunc::one();
  // LinearLeft: x -> m00 x + m01 y, y -> m10 x + m11 y.
  std::array<RatFunc, 4> mat{RatFunc::one(), RatFunc(), RatFunc(),
                             RatFunc::one()};

  static ElementaryAuto transvect_y(const RatFunc& r, const RatFunc& rp,
                                    const TailForm& tail);
  static ElementaryAuto transvect_x(const RatFunc& q, const RatFunc& qp,
                                    const TailForm& tail);
  static ElementaryAuto scale(const RatFunc& p1, const RatFunc& q1,
                              const RatFunc& p2, const RatFunc& q2);
  static ElementaryAuto linear_left(const std::array<RatFunc, 4>& mat);
  bool is_transvection() const {
    return kind == Kind::TransvectY || kind == Kind::TransvectX;
  }
};

Endo to_endo(const ElementaryAuto& s);
ElementaryAuto invert_elementary(const ElementaryAuto& s);

// B . phi . B^-1 where B = by[n-1] . ... . by[0] (by[0] acts first).
Endo conjugate(const Endo& phi, const std::vector<ElementaryAuto>& by);

}  // namespace nagata

#endif
