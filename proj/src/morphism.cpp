#include "nagata/morphism.hpp"

#include <algorithm>

#include "nagata/errors.hpp"

namespace nagata {

NCElement apply(const Endo& e, const NCElement& a) {
  return a.substitute(e.image_x, e.image_y);
}

Endo compose(const Endo& outer, const Endo& inner) {
  return {apply(outer, inner.image_x), apply(outer, inner.image_y)};
}

bool is_z_polynomial(const Endo& e) {
  return e.image_x.is_z_polynomial() && e.image_y.is_z_polynomial();
}

CommEndo abelianize_endo(const Endo& e) {
  return {e.image_x.abelianize(), e.image_y.abelianize()};
}

int TailForm::max_letters() const {
  int d = kDegNegInf;
  for (const TailSummand& s : summands) d = std::max(d, s.letters());
  return d;
}

int TailForm::min_letters() const {
  int d = kValPosInf;
  for (const TailSummand& s : summands) d = std::min(d, s.letters());
  return d;
}

NCElement TailForm::materialize(Letter v) const {
  std::vector<TensorWord> words;
  words.reserve(summands.size());
  for (const TailSummand& s : summands) {
    TensorWord w;
    w.skel = Skeleton(s.letters(), char(v));
    w.slots = s.coeffs;
    words.push_back(std::move(w));
  }
  return NCElement::from_words(std::move(words));
}

TailForm TailForm::scaled(const RatFunc& left, const RatFunc& right) const {
  TailForm t = *this;
  for (TailSummand& s : t.summands) {
    s.coeffs.front() = left * s.coeffs.front();
    s.coeffs.back() = s.coeffs.back() * right;
  }
  return t;
}

TailForm TailForm::negated() const {
  TailForm t = *this;
  for (TailSummand& s : t.summands) s.coeffs.front() = -s.coeffs.front();
  return t;
}

namespace {

void validate_tail(const TailForm& tail, int min_letters) {
  for (const TailSummand& s : tail.summands) {
    if (s.letters() < min_letters)
      throw Error(ErrorCode::InvalidArgument,
                  "tail summand shorter than allowed");
    for (const RatFunc& c : s.coeffs)
      if (c.is_zero())
        throw Error(ErrorCode::InvalidArgument, "zero tail coefficient");
  }
}

void validate_nonzero(std::initializer_list<RatFunc> cs) {
  for (const RatFunc& c : cs)
    if (c.is_zero())
      throw Error(ErrorCode::InvalidArgument,
                  "elementary automorphism needs nonzero coefficients");
}

}  // namespace

ElementaryAuto ElementaryAuto::transvect_y(const RatFunc& r, const RatFunc& rp,
                                           const TailForm& tail) {
  validate_nonzero({r, rp});
  validate_tail(tail, 1);
  ElementaryAuto s;
  s.kind = Kind::TransvectY;
  s.r = r;
  s.rp = rp;
  s.tail = tail;
  return s;
}

ElementaryAuto ElementaryAuto::transvect_x(const RatFunc& q, const RatFunc& qp,
                                           const TailForm& tail) {
  ElementaryAuto s = transvect_y(q, qp, tail);
  s.kind = Kind::TransvectX;
  return s;
}

ElementaryAuto ElementaryAuto::scale(const RatFunc& p1, const RatFunc& q1,
                                     const RatFunc& p2, const RatFunc& q2) {
  validate_nonzero({p1, q1, p2, q2});
  ElementaryAuto s;
  s.kind = Kind::Scale;
  s.p1 = p1;
  s.q1 = q1;
  s.p2 = p2;
  s.q2 = q2;
  return s;
}

ElementaryAuto ElementaryAuto::linear_left(const std::array<RatFunc, 4>& mat) {
  if ((mat[0] * mat[3] - mat[1] * mat[2]).is_zero())
    throw Error(ErrorCode::InvalidArgument, "singular left-linear matrix");
  ElementaryAuto s;
  s.kind = Kind::LinearLeft;
  s.mat = mat;
  return s;
}

Endo to_endo(const ElementaryAuto& s) {
  const NCElement x = NCElement::x(), y = NCElement::y();
  switch (s.kind) {
    case ElementaryAuto::Kind::TransvectY:
      return {x, NCElement::constant(s.r) * y * NCElement::constant(s.rp) +
                     s.tail.materialize(Letter::X)};
    case ElementaryAuto::Kind::TransvectX:
      return {NCElement::constant(s.r) * x * NCElement::constant(s.rp) +
                  s.tail.materialize(Letter::Y),
              y};
    case ElementaryAuto::Kind::Scale:
      return {x.left_mul(s.p1).right_mul(s.q1),
              y.left_mul(s.p2).right_mul(s.q2)};
    case ElementaryAuto::Kind::LinearLeft:
    default:
      return {x.left_mul(s.mat[0]) + y.left_mul(s.mat[1]),
              x.left_mul(s.mat[2]) + y.left_mul(s.mat[3])};
  }
}

ElementaryAuto invert_elementary(const ElementaryAuto& s) {
  switch (s.kind) {
    case ElementaryAuto::Kind::TransvectY: {
      // y -> r^-1 (y - G(x)) r'^-1
      RatFunc ri = s.r.inverse(), rpi = s.rp.inverse();
      return ElementaryAuto::transvect_y(ri, rpi,
                                         s.tail.negated().scaled(ri, rpi));
    }
    case ElementaryAuto::Kind::TransvectX: {
      RatFunc ri = s.r.inverse(), rpi = s.rp.inverse();
      return ElementaryAuto::transvect_x(ri, rpi,
                                         s.tail.negated().scaled(ri, rpi));
    }
    case ElementaryAuto::Kind::Scale:
      return ElementaryAuto::scale(s.p1.inverse(), s.q1.inverse(),
                                   s.p2.inverse(), s.q2.inverse());
    case ElementaryAuto::Kind::LinearLeft:
    default: {
      RatFunc det = s.mat[0] * s.mat[3] - s.mat[1] * s.mat[2];
      std::array<RatFunc, 4> inv{s.mat[3] / det, -(s.mat[1] / det),
                                 -(s.mat[2] / det), s.mat[0] / det};
      return ElementaryAuto::linear_left(inv);
    }
  }
}

Endo conjugate(const Endo& phi, const std::vector<ElementaryAuto>& by) {
  Endo b = Endo::identity();
  Endo binv = Endo::identity();
  for (const ElementaryAuto& s : by) {
    b = compose(to_endo(s), b);
    binv = compose(binv, to_endo(invert_elementary(s)));
  }
  return compose(compose(b, phi), binv);
}

}  // namespace nagata
