#ifndef NAGATA_FREEALG_HPP
#define NAGATA_FREEALG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nagata/commutative.hpp"
#include "nagata/ratfunc.hpp"

namespace nagata {

// Letters of the free part; skeletons are strings over {'x', 'y'}.
enum class Letter : char { X = 'x', Y = 'y' };
using Skeleton = std::string;

// One monomial of F(z) * F<x,y>: q0 v1 q1 v2 ... vk qk with all slots
// nonzero. A word with no letters is a pure coefficient.
struct TensorWord {
  Skeleton skel;
  std::vector<RatFunc> slots;  // skel.size() + 1 entries

  int letters() const { return int(skel.size()); }
  const RatFunc& left() const { return slots.front(); }
  const RatFunc& right() const { return slots.back(); }
  static int compare(const TensorWord& a, const TensorWord& b);
};

// Per-skeleton exponent expansion over common slot denominators; the
// canonical zero test and the matching solvers work on this view.
struct KeyGroup {
  Skeleton skel;
  std::vector<Poly> dens;                  // monic lcm per slot position
  std::map<std::vector<int>, Rational> keys;  // slot exponents -> coefficient
};

// Element of the coproduct F(z) * F<x,y>, kept in a canonical normal form:
// per skeleton the terms are expanded over common slot denominators and
// recombined, so a normalized element is zero iff it has no terms.
class NCElement {
 public:
  NCElement() = default;
  static NCElement constant(const RatFunc& q);
  static NCElement constant(const Rational& q) {
    return constant(RatFunc(q));
  }
  static NCElement letter(Letter v);
  static NCElement x() { return letter(Letter::X); }
  static NCElement y() { return letter(Letter::Y); }
  static NCElement word(const TensorWord& w);
  static NCElement from_words(std::vector<TensorWord> words);

  const std::vector<TensorWord>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  NCElement operator-() const;
  NCElement operator+(const NCElement& o) const;
  NCElement operator-(const NCElement& o) const;
  NCElement operator*(const NCElement& o) const;
  NCElement& operator+=(const NCElement& o) { return *this = *this + o; }
  NCElement& operator-=(const NCElement& o) { return *this = *this - o; }
  NCElement& operator*=(const NCElement& o) { return *this = *this * o; }
  bool operator==(const NCElement& o) const { return (*this - o).is_zero(); }
  bool operator!=(const NCElement& o) const { return !(*this == o); }

  NCElement left_mul(const RatFunc& q) const;
  NCElement right_mul(const RatFunc& q) const;
  NCElement pow(int e) const;

  // Letter count of the longest surviving word; kDegNegInf for zero.
  int degree() const;
  // Max over terms of r * #x + s * #y; kDegNegInf for zero. A pure
  // coefficient term weighs 0.
  int weight_degree(int r, int s) const;
  // Terms of maximal degree. Throws ZeroElement on zero input.
  NCElement highest_form() const;

  // True iff some surviving term has an interior slot outside F[z].
  bool has_sandwich() const;
  // Min over terms of the valuation at 0 of the boundary slot;
  // kValPosInf for zero.
  int right_z_degree() const;
  int left_z_degree() const;
  bool is_z_polynomial() const;

  // z -> z + c in every slot; a ring automorphism.
  NCElement shift_all_z(const Rational& c) const;

  // Homomorphic image under x -> img_x, y -> img_y (z fixed, slots kept
  // in place).
  NCElement substitute(const NCElement& img_x, const NCElement& img_y) const;

  CommPoly abelianize() const;

  std::vector<KeyGroup> key_form() const;

  std::string to_string() const;

 private:
  void normalize(std::vector<TensorWord>&& raw);
  std::vector<TensorWord> terms_;
};

inline NCElement nc_add(const NCElement& a, const NCElement& b) {
  return a + b;
}
inline NCElement nc_mul(const NCElement& a, const NCElement& b) {
  return a * b;
}
inline bool nc_is_zero(const NCElement& a) { return a.is_zero(); }

// Dense matrix over the rationals, just big enough for the evaluation
// oracle.
class RatMatrix {
 public:
  RatMatrix(int n) : n_(n), a_(size_t(n) * n, Rational(0)) {}
  static RatMatrix identity(int n);
  int dim() const { return n_; }
  Rational& at(int i, int j) { return a_[size_t(i) * n_ + j]; }
  const Rational& at(int i, int j) const { return a_[size_t(i) * n_ + j]; }
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix scaled(const Rational& c) const;
  bool is_zero() const;
  bool operator==(const RatMatrix& o) const {
    return n_ == o.n_ && a_ == o.a_;
  }

 private:
  int n_;
  std::vector<Rational> a_;
};

// Randomized zero-test oracle: substitutes seeded random integer matrices
// for x, y and a random rational for z. Requires
// dim >= ceil((degree + 2) / 2) so that the standard identity of dim x dim
// matrices cannot vanish spuriously on the tested degree. Throws PoleHit if
// the z sample hits a slot denominator root.
RatMatrix eval_matrices(const NCElement& a, int dim, uint64_t seed);
int oracle_min_dim(const NCElement& a);

}  // namespace nagata

#endif
