#include <doctest.h>

#include <random>

#include "nagata/errors.hpp"
#include "nagata/morphism.hpp"

using namespace nagata;

namespace {

const NCElement X = NCElement::x();
const NCElement Y = NCElement::y();
const RatFunc Z = RatFunc::z();
const RatFunc One = RatFunc::one();

TailForm tail_of(std::vector<std::vector<RatFunc>> rows) {
  TailForm t;
  for (auto& r : rows) t.summands.push_back({std::move(r)});
  return t;
}

// x^2 with unit decorations
TailForm xx_tail() { return tail_of({{One, One, One}}); }

ElementaryAuto random_transvect(std::mt19937_64& rng, bool on_y) {
  auto coeff = [&rng]() {
    long n = long(rng() % 5) - 2;
    if (n == 0) n = 1;
    return RatFunc(Poly(Rational(n), int(rng() % 2)),
                   Poly(Rational(1), int(rng() % 2)));
  };
  TailForm t;
  int summands = 1 + int(rng() % 2);
  for (int i = 0; i < summands; ++i) {
    int letters = 2 + int(rng() % 2);
    TailSummand s;
    for (int j = 0; j <= letters; ++j) s.coeffs.push_back(coeff());
    t.summands.push_back(std::move(s));
  }
  return on_y ? ElementaryAuto::transvect_y(coeff(), coeff(), t)
              : ElementaryAuto::transvect_x(coeff(), coeff(), t);
}

ElementaryAuto random_linear(std::mt19937_64& rng) {
  auto coeff = [&rng]() {
    long n = long(rng() % 5) - 2;
    if (n == 0) n = 1;
    return RatFunc(Poly(Rational(n), int(rng() % 2)),
                   Poly(Rational(1), int(rng() % 2)));
  };
  if (rng() % 2)
    return ElementaryAuto::scale(coeff(), coeff(), coeff(), coeff());
  while (true) {
    std::array<RatFunc, 4> m{coeff(), coeff(), coeff(), coeff()};
    if (!(m[0] * m[3] - m[1] * m[2]).is_zero())
      return ElementaryAuto::linear_left(m);
  }
}

}  // namespace

TEST_CASE("apply and compose") {
  Endo id = Endo::identity();
  NCElement a = X * Y + Y.left_mul(Z);
  CHECK(apply(id, a) == a);
  Endo e{X, Y + X * X};
  CHECK(apply(e, Y) == Y + X * X);
  CHECK(apply(e, X * Y) == X * (Y + X * X));
  CHECK(compose(e, id) == e);
  CHECK(compose(id, e) == e);
  // (outer o inner)(t) = outer(inner(t))
  Endo inner{X + Y * Y, Y};
  Endo c = compose(e, inner);
  CHECK(c.image_x == X + (Y + X * X) * (Y + X * X));
  CHECK(c.image_y == Y + X * X);
}

TEST_CASE("compose associativity") {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 10; ++i) {
    Endo a = to_endo(random_transvect(rng, true));
    Endo b = to_endo(random_transvect(rng, false));
    Endo c = to_endo(random_linear(rng));
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("to_endo of the elementary types") {
  // TransvectY(1, 1, x^2) is (x, y + x^2)
  Endo t = to_endo(ElementaryAuto::transvect_y(One, One, xx_tail()));
  CHECK(t.image_x == X);
  CHECK(t.image_y == Y + X * X);

  Endo s = to_endo(ElementaryAuto::scale(Z, One, One, One));
  CHECK(s.image_x == X.left_mul(Z));
  CHECK(s.image_y == Y);

  Endo l = to_endo(ElementaryAuto::linear_left(
      {RatFunc(), One, One, RatFunc()}));
  CHECK(l.image_x == Y);
  CHECK(l.image_y == X);
}

TEST_CASE("invert elementary") {
  // (x, y + x^2) inverse is (x, y - x^2)
  ElementaryAuto t = ElementaryAuto::transvect_y(One, One, xx_tail());
  Endo inv = to_endo(invert_elementary(t));
  CHECK(inv.image_y == Y - X * X);
  CHECK(compose(to_endo(t), inv) == Endo::identity());

  ElementaryAuto s = ElementaryAuto::scale(Z, One, One, One);
  ElementaryAuto si = invert_elementary(s);
  CHECK(si.p1 == One / Z);
  CHECK(compose(to_endo(s), to_endo(si)) == Endo::identity());

  ElementaryAuto l = ElementaryAuto::linear_left({One, Z, RatFunc(), One});
  ElementaryAuto li = invert_elementary(l);
  CHECK(li.mat[1] == -Z);
  CHECK(compose(to_endo(l), to_endo(li)) == Endo::identity());
}

TEST_CASE("inverse pairs on random elementary automorphisms") {
  std::mt19937_64 rng(321);
  for (int i = 0; i < 20; ++i) {
    ElementaryAuto s = (i % 3 == 2) ? random_linear(rng)
                                    : random_transvect(rng, i % 2 == 0);
    CHECK(compose(to_endo(s), to_endo(invert_elementary(s))) ==
          Endo::identity());
    CHECK(compose(to_endo(invert_elementary(s)), to_endo(s)) ==
          Endo::identity());
  }
}

TEST_CASE("conjugate") {
  Endo e{X, Y + X.left_mul(Z)};
  CHECK(conjugate(e, {}) == e);
  std::mt19937_64 rng(11);
  std::vector<ElementaryAuto> by{random_transvect(rng, true),
                                 random_linear(rng)};
  CHECK(conjugate(Endo::identity(), by) == Endo::identity());
}

TEST_CASE("conjugation builds the Nagata endomorphism") {
  // b1: x -> x + y^2, b2: x -> z x; B = b2 . b1.
  // B . (x, y + z x) . B^-1 abelianizes to the Nagata automorphism.
  TailForm yy = tail_of({{One, One, One}});
  ElementaryAuto b1 = ElementaryAuto::transvect_x(One, One, yy);
  ElementaryAuto b2 = ElementaryAuto::scale(Z, One, One, One);
  Endo phi{X, Y + NCElement::word({Skeleton("x"), {Z, One}})};
  Endo conj = conjugate(phi, {b1, b2});

  CommEndo ab = abelianize_endo(conj);
  const CommPoly Px = CommPoly::x(), Py = CommPoly::y();
  CommPoly w = Py * Py + Px * CommPoly::constant(Z);
  CommPoly nf =
      Px - (Py * w).scaled(RatFunc(Rational(2))) - (w * w).scaled(Z);
  CommPoly ng = Py + w.scaled(Z);
  CHECK(ab.image_x == nf);
  CHECK(ab.image_y == ng);
}

TEST_CASE("is z polynomial") {
  CHECK(is_z_polynomial({X, Y + X.left_mul(Z)}));
  CHECK(!is_z_polynomial({X, Y + (X * X).left_mul(One / Z)}));
}

TEST_CASE("abelianize endo is functorial") {
  Endo id = Endo::identity();
  CHECK(abelianize_endo(id) == CommEndo::identity());
  // commutator dies
  Endo e{X, Y + X * Y - Y * X};
  CHECK(abelianize_endo(e) == CommEndo::identity());
  std::mt19937_64 rng(99);
  for (int i = 0; i < 12; ++i) {
    Endo a = to_endo(random_transvect(rng, true));
    Endo b = to_endo(random_transvect(rng, false));
    CHECK(abelianize_endo(compose(a, b)) ==
          comm_compose(abelianize_endo(a), abelianize_endo(b)));
  }
}
