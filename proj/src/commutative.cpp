#include "nagata/commutative.hpp"

#include <algorithm>
#include <sstream>

#include "nagata/errors.hpp"

namespace nagata {

RatFunc CommPoly::coeff(int dx, int dy) const {
  auto it = terms_.find({dx, dy});
  return it == terms_.end() ? RatFunc() : it->second;
}

CommPoly CommPoly::operator-() const {
  CommPoly r;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

CommPoly CommPoly::operator+(const CommPoly& o) const {
  CommPoly r = *this;
  for (const auto& [k, c] : o.terms_) {
    auto [it, fresh] = r.terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

CommPoly CommPoly::operator-(const CommPoly& o) const { return *this + (-o); }

CommPoly CommPoly::operator*(const CommPoly& o) const {
  CommPoly r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      std::pair<int, int> k{k1.first + k2.first, k1.second + k2.second};
      auto [it, fresh] = r.terms_.emplace(k, c1 * c2);
      if (!fresh) {
        it->second += c1 * c2;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  return r;
}

CommPoly CommPoly::scaled(const RatFunc& c) const {
  CommPoly r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
  return r;
}

CommPoly CommPoly::pow(int e) const {
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative power");
  CommPoly r = CommPoly::constant(RatFunc::one());
  CommPoly base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

int CommPoly::degree() const {
  int d = kDegNegInf;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

CommPoly CommPoly::leading_form() const {
  CommPoly r;
  const int d = degree();
  for (const auto& [k, c] : terms_)
    if (k.first + k.second == d) r.terms_[k] = c;
  return r;
}

CommPoly CommPoly::deriv_x() const {
  CommPoly r;
  for (const auto& [k, c] : terms_)
    if (k.first > 0)
      r.terms_[{k.first - 1, k.second}] = c * RatFunc(Rational(k.first));
  return r;
}

CommPoly CommPoly::deriv_y() const {
  CommPoly r;
  for (const auto& [k, c] : terms_)
    if (k.second > 0)
      r.terms_[{k.first, k.second - 1}] = c * RatFunc(Rational(k.second));
  return r;
}

CommPoly CommPoly::substitute(const CommPoly& fx, const CommPoly& fy) const {
  // Cache the powers that actually occur.
  auto powers = [](const CommPoly& p, int maxe) {
    std::vector<CommPoly> v{CommPoly::constant(RatFunc::one())};
    for (int i = 1; i <= maxe; ++i) v.push_back(v.back() * p);
    return v;
  };
  int mx = 0, my = 0;
  for (const auto& [k, c] : terms_) {
    mx = std::max(mx, k.first);
    my = std::max(my, k.second);
  }
  std::vector<CommPoly> px = powers(fx, mx), py = powers(fy, my);
  CommPoly r;
  for (const auto& [k, c] : terms_)
    r += (px[k.first] * py[k.second]).scaled(c);
  return r;
}

bool CommPoly::has_polynomial_coeffs() const {
  for (const auto& [k, c] : terms_)
    if (!c.is_polynomial()) return false;
  return true;
}

CommPoly CommPoly::shifted(const Rational& c) const {
  CommPoly r;
  for (const auto& [k, v] : terms_) r.terms_[k] = v.shifted(c);
  return r;
}

std::string CommPoly::to_string() const {
  if (terms_.empty()) return "0";
  auto coeff_str = [](const RatFunc& q) {
    std::string s = q.to_string();
    if (s.find(' ') != std::string::npos || s[0] == '-') s = "(" + s + ")";
    return s;
  };
  std::ostringstream os;
  bool first = true;
  // Highest total degree first, x before y.
  std::vector<std::pair<std::pair<int, int>, RatFunc>> items(terms_.begin(),
                                                             terms_.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    int da = a.first.first + a.first.second;
    int db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  for (const auto& [k, c] : items) {
    if (!first) os << " + ";
    first = false;
    bool started = false;
    if (!c.is_one() || (k.first == 0 && k.second == 0)) {
      os << coeff_str(c);
      started = true;
    }
    auto put = [&](const char* v, int e) {
      if (e == 0) return;
      if (started) os << " * ";
      os << v;
      if (e > 1) os << "^" << e;
      started = true;
    };
    put("x", k.first);
    put("y", k.second);
  }
  return os.str();
}

CommPoly comm_apply(const CommEndo& e, const CommPoly& p) {
  return p.substitute(e.image_x, e.image_y);
}

CommEndo comm_compose(const CommEndo& outer, const CommEndo& inner) {
  return {comm_apply(outer, inner.image_x), comm_apply(outer, inner.image_y)};
}

CommPoly jacobian_det(const CommEndo& e) {
  return e.image_x.deriv_x() * e.image_y.deriv_y() -
         e.image_x.deriv_y() * e.image_y.deriv_x();
}

CommStep CommStep::elem_x(const RatFunc& c, int m) {
  if (c.is_zero() || m < 2)
    throw Error(ErrorCode::InvalidArgument, "elementary step needs c != 0, m >= 2");
  CommStep s;
  s.kind = Kind::ElemX;
  s.c = c;
  s.m = m;
  return s;
}

CommStep CommStep::elem_y(const RatFunc& c, int m) {
  CommStep s = elem_x(c, m);
  s.kind = Kind::ElemY;
  return s;
}

CommStep CommStep::affine(const std::array<RatFunc, 4>& mat, const RatFunc& tx,
                          const RatFunc& ty) {
  if ((mat[0] * mat[3] - mat[1] * mat[2]).is_zero())
    throw Error(ErrorCode::NotAnAutomorphism, "affine part singular");
  CommStep s;
  s.kind = Kind::Affine;
  s.mat = mat;
  s.tx = tx;
  s.ty = ty;
  return s;
}

CommEndo CommStep::to_endo() const {
  switch (kind) {
    case Kind::ElemX:
      return {CommPoly::x() + CommPoly(c, 0, m), CommPoly::y()};
    case Kind::ElemY:
      return {CommPoly::x(), CommPoly::y() + CommPoly(c, m, 0)};
    case Kind::Affine:
    default:
      return {CommPoly(mat[0], 1, 0) + CommPoly(mat[1], 0, 1) +
                  CommPoly::constant(tx),
              CommPoly(mat[2], 1, 0) + CommPoly(mat[3], 0, 1) +
                  CommPoly::constant(ty)};
  }
}

bool CommStep::is_identity() const {
  return kind == Kind::Affine && mat[0].is_one() && mat[1].is_zero() &&
         mat[2].is_zero() && mat[3].is_one() && tx.is_zero() && ty.is_zero();
}

bool CommStep::has_polynomial_coeffs() const {
  if (kind != Kind::Affine) return c.is_polynomial();
  for (const RatFunc& e : mat)
    if (!e.is_polynomial()) return false;
  return tx.is_polynomial() && ty.is_polynomial();
}

std::string CommStep::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::ElemX:
      os << "x -> x + (" << c.to_string() << ")*y^" << m;
      break;
    case Kind::ElemY:
      os << "y -> y + (" << c.to_string() << ")*x^" << m;
      break;
    case Kind::Affine:
      os << "affine [[" << mat[0].to_string() << ", " << mat[1].to_string()
         << "], [" << mat[2].to_string() << ", " << mat[3].to_string()
         << "]] + (" << tx.to_string() << ", " << ty.to_string() << ")";
      break;
  }
  return os.str();
}

CommEndo comm_recompose(const std::vector<CommStep>& steps) {
  CommEndo e = CommEndo::identity();
  for (const CommStep& s : steps) e = comm_compose(e, s.to_endo());
  return e;
}

std::vector<CommEndo> comm_replay(const std::vector<CommStep>& steps) {
  std::vector<CommEndo> stages{CommEndo::identity()};
  for (const CommStep& s : steps)
    stages.push_back(comm_compose(stages.back(), s.to_endo()));
  return stages;
}

namespace {

// c with hi = c * lo for homogeneous forms, if such c in F(z) exists.
std::optional<RatFunc> form_ratio(const CommPoly& hi, const CommPoly& lo) {
  if (lo.is_zero()) return std::nullopt;
  const auto& [k, v] = *lo.terms().begin();
  RatFunc c = hi.coeff(k.first, k.second) / v;
  if (c.is_zero()) return std::nullopt;
  if (hi != lo.scaled(c)) return std::nullopt;
  return c;
}

struct PeelState {
  CommPoly f, g;
  std::vector<CommStep> peeled;  // peel order; reversed on emission
};

// One peeling pass shared by the plain and the F[z]-gated decomposition.
// `gate` != nullptr turns on the polynomiality gate; a gate failure is
// reported there and stops the loop.
bool peel_loop(PeelState& st, ZTameFailure* gate_fail, bool gated) {
  while (true) {
    const int df = st.f.degree();
    const int dg = st.g.degree();
    if (df < 1 || dg < 1)
      throw Error(ErrorCode::NotAnAutomorphism,
                  "image degenerates during peeling");
    if (df + dg <= 2) return true;

    // Peel the strictly higher image; on ties try y first.
    bool reduced = false;
    std::optional<std::pair<RatFunc, int>> gate_block;
    const bool prefer_y = dg >= df;
    for (bool peel_y : {prefer_y, !prefer_y}) {
      CommPoly& t = peel_y ? st.g : st.f;
      CommPoly& lo = peel_y ? st.f : st.g;
      const int dt = t.degree(), dl = lo.degree();
      if (dt < dl || dt % dl != 0) continue;
      const int m = dt / dl;
      auto c = form_ratio(t.leading_form(), lo.leading_form().pow(m));
      if (!c) continue;
      if (gated && !c->is_polynomial()) {
        if (!gate_block) gate_block = {*c, m};
        continue;
      }
      t -= lo.pow(m).scaled(*c);
      if (m == 1) {
        // Degree-one mixing is an affine stage, not an elementary step.
        std::array<RatFunc, 4> mat{RatFunc::one(), RatFunc(), RatFunc(),
                                   RatFunc::one()};
        (peel_y ? mat[2] : mat[1]) = *c;
        st.peeled.push_back(CommStep::affine(mat, RatFunc(), RatFunc()));
      } else {
        st.peeled.push_back(peel_y ? CommStep::elem_y(*c, m)
                                   : CommStep::elem_x(*c, m));
      }
      reduced = true;
      break;
    }
    if (!reduced) {
      if (gated && gate_block) {
        if (gate_fail) {
          gate_fail->reason = "peeling coefficient left F[z]";
          gate_fail->coefficient = gate_block->first;
          gate_fail->exponent = gate_block->second;
        }
        return false;
      }
      throw Error(ErrorCode::NotAnAutomorphism,
                  "leading-form division fails");
    }
  }
}

// Terminal affine part from two images of degree <= 1.
CommStep terminal_affine(const CommPoly& f, const CommPoly& g) {
  std::array<RatFunc, 4> mat{f.coeff(1, 0), f.coeff(0, 1), g.coeff(1, 0),
                             g.coeff(0, 1)};
  return CommStep::affine(mat, f.coeff(0, 0), g.coeff(0, 0));
}

}  // namespace

std::vector<CommStep> jvdk_decompose(const CommEndo& e) {
  PeelState st{e.image_x, e.image_y, {}};
  peel_loop(st, nullptr, false);
  std::vector<CommStep> steps;
  CommStep aff = terminal_affine(st.f, st.g);
  if (!aff.is_identity()) steps.push_back(aff);
  steps.insert(steps.end(), st.peeled.rbegin(), st.peeled.rend());
  // The emitted process must recompose to the input exactly.
  CommEndo back = comm_recompose(steps);
  if (!(back == e))
    throw Error(ErrorCode::Internal, "peeling recomposition mismatch");
  return steps;
}

ZTameResult z_tame_decompose(const CommEndo& e) {
  // Confirm automorphism status first so failures are honest z-tameness
  // failures rather than non-automorphisms.
  jvdk_decompose(e);
  ZTameResult res;
  PeelState st{e.image_x, e.image_y, {}};
  ZTameFailure fail;
  if (!peel_loop(st, &fail, true)) {
    res.failure = fail;
    return res;
  }
  CommStep aff = terminal_affine(st.f, st.g);
  if (!aff.has_polynomial_coeffs()) {
    res.failure = ZTameFailure{"terminal affine part not over F[z]", {}, {}};
    return res;
  }
  RatFunc det = aff.mat[0] * aff.mat[3] - aff.mat[1] * aff.mat[2];
  if (!det.is_constant()) {
    res.failure =
        ZTameFailure{"terminal affine determinant not a unit of F[z]", {}, {}};
    return res;
  }
  std::vector<CommStep> steps;
  if (!aff.is_identity()) steps.push_back(aff);
  steps.insert(steps.end(), st.peeled.rbegin(), st.peeled.rend());
  res.witness = std::move(steps);
  return res;
}

std::optional<PatternOffender> detect_pattern(
    const std::vector<CommStep>& steps) {
  for (size_t i = 0; i < steps.size(); ++i) {
    const CommStep& s = steps[i];
    if (s.kind == CommStep::Kind::Affine) continue;
    if (s.m < 2 || s.c.is_polynomial()) continue;
    int v0 = s.c.valuation_at(0);
    if (v0 < 0) return PatternOffender{i, s.c, s.m, Rational(0), -v0};
    // Remark on valuations: a pole at any rational point works the same
    // way after the substitution z -> z + a.
    auto roots = s.c.den().rational_roots();
    if (!roots.empty()) {
      const auto& [a, mult] = roots.front();
      return PatternOffender{i, s.c, s.m, a, -s.c.valuation_at(a)};
    }
  }
  return std::nullopt;
}

std::vector<CommStep> linear_z_tame_reduce(const std::array<RatFunc, 4>& m) {
  for (const RatFunc& e : m)
    if (!e.is_polynomial())
      throw Error(ErrorCode::InvalidArgument, "matrix entries must be in F[z]");
  RatFunc det = m[0] * m[3] - m[1] * m[2];
  if (det.is_zero() || !det.is_constant())
    throw Error(ErrorCode::NonUnitDeterminant,
                "determinant must be a nonzero rational");

  // Reduce A to a diagonal by left row operations E_k ... E_1 A = D, then
  // M = E_1^-1 ... E_k^-1 D. A transvection factor stays a transvection
  // under inversion.
  std::array<Poly, 4> a{m[0].as_poly(), m[1].as_poly(), m[2].as_poly(),
                        m[3].as_poly()};
  // factors collects E_i^-1 in application order.
  std::vector<std::array<RatFunc, 4>> factors;
  auto row_op = [&](int dst, int src, const Poly& q) {
    // row_dst -= q * row_src on A; records the inverse factor.
    a[2 * dst] -= q * a[2 * src];
    a[2 * dst + 1] -= q * a[2 * src + 1];
    std::array<RatFunc, 4> inv{RatFunc::one(), RatFunc(), RatFunc(),
                               RatFunc::one()};
    inv[2 * dst + src] = RatFunc(q);
    factors.push_back(inv);
  };
  int guard = 0;
  while (!a[2].is_zero()) {
    if (++guard > 200)
      throw Error(ErrorCode::Internal, "column reduction did not terminate");
    if (a[0].is_zero()) {
      row_op(0, 1, Poly(Rational(-1)));
      continue;
    }
    if (a[0].degree() > a[2].degree()) {
      Poly q = Poly::divmod(a[0], a[2]).first;
      row_op(0, 1, q);
    } else {
      Poly q = Poly::divmod(a[2], a[0]).first;
      row_op(1, 0, q);
    }
  }
  // a[0] * a[3] = det up to the recorded ops; both must be constants.
  if (!a[0].is_constant() || !a[3].is_constant())
    throw Error(ErrorCode::NonUnitDeterminant,
                "column gcd is not a unit of F[z]");
  if (!a[1].is_zero()) {
    Poly q = Poly::exact_div(a[1], a[3]);
    row_op(0, 1, q);
  }
  std::vector<CommStep> steps;
  // Process order composes right factor first: emit D, then E_k^-1 ... E_1^-1.
  steps.push_back(CommStep::affine(
      {RatFunc(a[0]), RatFunc(), RatFunc(), RatFunc(a[3])}, RatFunc(),
      RatFunc()));
  for (auto it = factors.rbegin(); it != factors.rend(); ++it)
    steps.push_back(CommStep::affine(*it, RatFunc(), RatFunc()));
  CommEndo want{CommPoly(m[0], 1, 0) + CommPoly(m[1], 0, 1),
                CommPoly(m[2], 1, 0) + CommPoly(m[3], 0, 1)};
  if (!(comm_recompose(steps) == want))
    throw Error(ErrorCode::Internal, "linear reduction product mismatch");
  return steps;
}

}  // namespace nagata
