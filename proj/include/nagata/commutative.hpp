#ifndef NAGATA_COMMUTATIVE_HPP
#define NAGATA_COMMUTATIVE_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nagata/ratfunc.hpp"

namespace nagata {

// Polynomial in F(z)[x, y]: finite map (deg_x, deg_y) -> nonzero coefficient.
class CommPoly {
 public:
  CommPoly() = default;
  static CommPoly constant(const RatFunc& c) {
    return CommPoly(c, 0, 0);
  }
  static CommPoly x() { return CommPoly(RatFunc::one(), 1, 0); }
  static CommPoly y() { return CommPoly(RatFunc::one(), 0, 1); }
  CommPoly(const RatFunc& c, int dx, int dy) {
    if (!c.is_zero()) terms_[{dx, dy}] = c;
  }

  const std::map<std::pair<int, int>, RatFunc>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coeff(int dx, int dy) const;

  CommPoly operator-() const;
  CommPoly operator+(const CommPoly& o) const;
  CommPoly operator-(const CommPoly& o) const;
  CommPoly operator*(const CommPoly& o) const;
  CommPoly& operator+=(const CommPoly& o) { return *this = *this + o; }
  CommPoly& operator-=(const CommPoly& o) { return *this = *this - o; }
  CommPoly& operator*=(const CommPoly& o) { return *this = *this * o; }
  bool operator==(const CommPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const CommPoly& o) const { return !(*this == o); }

  CommPoly scaled(const RatFunc& c) const;
  CommPoly pow(int e) const;

  // Total degree in x, y; kDegNegInf for zero.
  int degree() const;
  // Homogeneous part of top total degree; zero input gives zero.
  CommPoly leading_form() const;

  CommPoly deriv_x() const;
  CommPoly deriv_y() const;

  // Image under x -> fx, y -> fy.
  CommPoly substitute(const CommPoly& fx, const CommPoly& fy) const;

  bool has_polynomial_coeffs() const;
  // z -> z + c on every coefficient.
  CommPoly shifted(const Rational& c) const;

  std::string to_string() const;

 private:
  std::map<std::pair<int, int>, RatFunc> terms_;
};

// Endomorphism of F(z)[x, y] given by the images of x and y (z fixed).
struct CommEndo {
  CommPoly image_x, image_y;
  static CommEndo identity() { return {CommPoly::x(), CommPoly::y()}; }
  bool operator==(const CommEndo& o) const {
    return image_x == o.image_x && image_y == o.image_y;
  }
};

CommPoly comm_apply(const CommEndo& e, const CommPoly& p);
// (outer . inner)(t) = outer(inner(t)).
CommEndo comm_compose(const CommEndo& outer, const CommEndo& inner);
// df/dx dg/dy - df/dy dg/dx.
CommPoly jacobian_det(const CommEndo& e);

// One stage of a decomposition over F(z). Elementary steps are monomial:
// ElemX is x -> x + c y^m, ElemY is y -> y + c x^m, m >= 2. Degree-one
// mixing and the terminal linear part are Affine steps.
struct CommStep {
  enum class Kind { ElemX, ElemY, Affine };
  Kind kind = Kind::Affine;
  RatFunc c;
  int m = 0;
  // Affine: x -> a x + b y + tx, y -> c x + d y + ty; matrix row-major.
  std::array<RatFunc, 4> mat{RatFunc::one(), RatFunc(), RatFunc(),
                             RatFunc::one()};
  RatFunc tx, ty;

  static CommStep elem_x(const RatFunc& c, int m);
  static CommStep elem_y(const RatFunc& c, int m);
  static CommStep affine(const std::array<RatFunc, 4>& mat, const RatFunc& tx,
                         const RatFunc& ty);
  CommEndo to_endo() const;
  bool is_identity() const;
  bool has_polynomial_coeffs() const;
  std::string to_string() const;
};

// Step lists are in process order: recompose([s1,...,sn]) = s1 . s2 ... sn,
// built by composing each next step on the inside, so replaying the list
// left to right from the identity passes through every intermediate stage
// of the degree-increasing process.
CommEndo comm_recompose(const std::vector<CommStep>& steps);
std::vector<CommEndo> comm_replay(const std::vector<CommStep>& steps);

// Jung-van der Kulk peeling over the field F(z). Throws NotAnAutomorphism.
std::vector<CommStep> jvdk_decompose(const CommEndo& e);

struct PatternOffender {
  size_t index;   // position in the step list
  RatFunc c;      // offending coefficient
  int l;          // exponent, > 1
  Rational pole;  // rational pole of c (0 when the pole is at z = 0)
  int k;          // pole order at `pole`
};

// Scans a canonical sequence for an elementary step of the shape
// (x, y + z^{-k} x^l + ...) with l > 1, up to the substitution z -> z + c.
std::optional<PatternOffender> detect_pattern(
    const std::vector<CommStep>& steps);

struct ZTameFailure {
  std::string reason;
  // Peeling data at the failing division, when applicable.
  std::optional<RatFunc> coefficient;
  std::optional<int> exponent;
};

struct ZTameResult {
  // Present iff the canonical peeling succeeded with every coefficient in
  // F[z]; recomposes to the input exactly.
  std::optional<std::vector<CommStep>> witness;
  std::optional<ZTameFailure> failure;
};

// Same peeling loop as jvdk_decompose with an F[z]-membership gate.
// Throws NotAnAutomorphism if the input is not an F(z)-automorphism at all.
ZTameResult z_tame_decompose(const CommEndo& e);

// Reduces a 2x2 matrix over F[z] with determinant in Q* to transvections
// and one rational diagonal scaling. Throws NonUnitDeterminant.
std::vector<CommStep> linear_z_tame_reduce(const std::array<RatFunc, 4>& m);

}  // namespace nagata

#endif
