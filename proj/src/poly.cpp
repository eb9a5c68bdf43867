#include "nagata/poly.hpp"

#include <sstream>

#include "nagata/errors.hpp"

namespace nagata {

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.set_coeff(e, r.coeff(e) + c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.set_coeff(e, r.coeff(e) - c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_)
      r.set_coeff(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r;
  if (c == 0) return r;
  for (const auto& [e, v] : coeffs_) r.coeffs_[e] = v * c;
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative poly power");
  Poly r = Poly::one();
  Poly base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw division_by_zero("polynomial division");
  Poly q, r = a;
  const int db = b.degree();
  const Rational lb = b.leading_coeff();
  while (!r.is_zero() && r.degree() >= db) {
    const int e = r.degree() - db;
    const Rational c = r.leading_coeff() / lb;
    q.set_coeff(e, q.coeff(e) + c);
    r -= b * Poly(c, e);
  }
  return {q, r};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero())
    throw Error(ErrorCode::Internal, "inexact polynomial division");
  return q;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

Poly Poly::lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly g = gcd(a, b);
  return exact_div(a * b, g).monic();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(1 / leading_coeff());
}

Poly Poly::derivative() const {
  Poly r;
  for (const auto& [e, c] : coeffs_)
    if (e > 0) r.coeffs_[e - 1] = c * e;
  return r;
}

Poly Poly::shifted(const Rational& c) const {
  if (c == 0) return *this;
  // z -> z + c via binomial expansion, exponent by exponent.
  Poly r;
  const Poly base = Poly::z() + Poly(c);
  for (const auto& [e, v] : coeffs_) r += base.pow(e).scaled(v);
  return r;
}

Rational Poly::eval(const Rational& a) const {
  Rational acc(0), p(1);
  int last = 0;
  for (const auto& [e, c] : coeffs_) {
    for (int i = last; i < e; ++i) p *= a;
    last = e;
    acc += c * p;
  }
  return acc;
}

std::vector<std::pair<Rational, int>> Poly::rational_roots() const {
  std::vector<std::pair<Rational, int>> out;
  if (is_zero() || is_constant()) return out;
  // Clear denominators to an integer polynomial, then apply the rational
  // root test: candidates p/q with p | constant, q | leading.
  mpz_class den_lcm(1);
  for (const auto& [e, c] : coeffs_) {
    mpz_class d = c.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  Poly p = scaled(Rational(den_lcm));
  // Strip z^k factor: root 0 with multiplicity k.
  int k = p.coeffs_.begin()->first;
  if (k > 0) {
    Poly q;
    for (const auto& [e, c] : p.coeffs_) q.coeffs_[e - k] = c;
    p = q;
    out.emplace_back(Rational(0), k);
  }
  if (p.is_constant()) return out;
  mpz_class a0 = p.constant_term().get_num();
  mpz_class an = p.leading_coeff().get_num();
  a0 = abs(a0);
  an = abs(an);
  auto divisors = [](const mpz_class& n) {
    std::vector<mpz_class> ds;
    for (mpz_class d(1); d * d <= n; ++d) {
      if (n % d == 0) {
        ds.push_back(d);
        ds.push_back(n / d);
      }
    }
    return ds;
  };
  for (const mpz_class& num : divisors(a0)) {
    for (const mpz_class& den : divisors(an)) {
      for (int sign : {1, -1}) {
        Rational cand(sign * num, den);
        cand.canonicalize();
        bool seen = false;
        for (auto& [r, m] : out) seen = seen || r == cand;
        if (seen) continue;
        int mult = 0;
        Poly cur = p;
        while (!cur.is_zero() && cur.eval(cand) == 0) {
          cur = exact_div(cur, Poly::z() - Poly(cand));
          ++mult;
        }
        if (mult > 0) out.emplace_back(cand, mult);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

int Poly::compare(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  auto ia = a.coeffs_.rbegin();
  auto ib = b.coeffs_.rbegin();
  while (ia != a.coeffs_.rend() && ib != b.coeffs_.rend()) {
    if (ia->first != ib->first) return ia->first > ib->first ? 1 : -1;
    int c = cmp(ia->second, ib->second);
    if (c != 0) return c;
    ++ia;
    ++ib;
  }
  if (ia != a.coeffs_.rend()) return 1;
  if (ib != b.coeffs_.rend()) return -1;
  return 0;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational ac = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const bool unit = ac == 1;
    if (e == 0 || !unit) os << ac.get_str();
    if (e > 0) {
      if (!unit) os << "*";
      os << "z";
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace nagata
