#include "nagata/freealg.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "nagata/errors.hpp"

namespace nagata {

int TensorWord::compare(const TensorWord& a, const TensorWord& b) {
  if (a.skel.size() != b.skel.size())
    return a.skel.size() < b.skel.size() ? -1 : 1;
  if (a.skel != b.skel) return a.skel < b.skel ? -1 : 1;
  for (size_t i = 0; i < a.slots.size(); ++i) {
    int c = RatFunc::compare(a.slots[i], b.slots[i]);
    if (c != 0) return c;
  }
  return 0;
}

NCElement NCElement::constant(const RatFunc& q) {
  NCElement e;
  if (!q.is_zero()) e.terms_.push_back({Skeleton(), {q}});
  return e;
}

NCElement NCElement::letter(Letter v) {
  NCElement e;
  e.terms_.push_back(
      {Skeleton(1, char(v)), {RatFunc::one(), RatFunc::one()}});
  return e;
}

NCElement NCElement::word(const TensorWord& w) {
  return from_words({w});
}

NCElement NCElement::from_words(std::vector<TensorWord> words) {
  NCElement e;
  e.normalize(std::move(words));
  return e;
}

namespace {

// Expands one word's slot numerators (rewritten over the group's common
// denominators) into exponent keys with rational coefficients.
void expand_word(const TensorWord& w, const std::vector<Poly>& dens,
                 std::map<std::vector<int>, Rational>& out) {
  const size_t n = w.slots.size();
  std::vector<Poly> nums(n);
  for (size_t i = 0; i < n; ++i)
    nums[i] = w.slots[i].num() *
              Poly::exact_div(dens[i], w.slots[i].den());
  std::vector<int> key(n, 0);
  // Iterative cross product over the slot monomials.
  std::vector<std::map<int, Rational>::const_iterator> its(n), ends(n);
  for (size_t i = 0; i < n; ++i) {
    its[i] = nums[i].coeffs().begin();
    ends[i] = nums[i].coeffs().end();
  }
  while (true) {
    Rational c(1);
    for (size_t i = 0; i < n; ++i) {
      key[i] = its[i]->first;
      c *= its[i]->second;
    }
    auto [it, fresh] = out.emplace(key, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
    size_t pos = 0;
    while (pos < n && ++its[pos] == ends[pos]) {
      its[pos] = nums[pos].coeffs().begin();
      ++pos;
    }
    if (pos == n) break;
  }
}

std::vector<Poly> common_denominators(const std::vector<TensorWord>& group) {
  const size_t n = group.front().slots.size();
  std::vector<Poly> dens(n, Poly::one());
  for (const TensorWord& w : group)
    for (size_t i = 0; i < n; ++i) dens[i] = Poly::lcm(dens[i], w.slots[i].den());
  return dens;
}

}  // namespace

std::vector<KeyGroup> NCElement::key_form() const {
  std::map<Skeleton, std::vector<TensorWord>> groups;
  for (const TensorWord& w : terms_) groups[w.skel].push_back(w);
  std::vector<KeyGroup> out;
  for (auto& [skel, ws] : groups) {
    KeyGroup g;
    g.skel = skel;
    g.dens = common_denominators(ws);
    for (const TensorWord& w : ws) expand_word(w, g.dens, g.keys);
    if (!g.keys.empty()) out.push_back(std::move(g));
  }
  return out;
}

void NCElement::normalize(std::vector<TensorWord>&& raw) {
  terms_.clear();
  std::map<Skeleton, std::vector<TensorWord>> groups;
  for (TensorWord& w : raw) {
    bool dead = false;
    for (const RatFunc& s : w.slots) dead = dead || s.is_zero();
    if (!dead) groups[w.skel].push_back(std::move(w));
  }
  for (auto& [skel, ws] : groups) {
    const size_t n = skel.size() + 1;
    std::vector<Poly> dens = common_denominators(ws);
    std::map<std::vector<int>, Rational> keys;
    for (const TensorWord& w : ws) expand_word(w, dens, keys);
    if (keys.empty()) continue;
    // Rebuild one word per key, coefficient folded into slot 0.
    std::vector<TensorWord> words;
    words.reserve(keys.size());
    for (const auto& [key, c] : keys) {
      TensorWord w;
      w.skel = skel;
      w.slots.reserve(n);
      for (size_t i = 0; i < n; ++i) {
        Poly num(i == 0 ? Rational(c) : Rational(1), key[i]);
        w.slots.push_back(RatFunc(num, dens[i]));
      }
      words.push_back(std::move(w));
    }
    // Recombine words that agree in all slots but one up to rational
    // scalars; scalars migrate into the merge slot. Repeat to a fixpoint
    // so slot polynomials collapse back out of the key form.
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t pos = 0; pos < n; ++pos) {
        std::map<std::string, size_t> seen;
        std::vector<TensorWord> merged;
        for (TensorWord& w : words) {
          Rational lam(1);
          std::string sig;
          for (size_t i = 0; i < n; ++i) {
            if (i == pos) continue;
            Rational lc = w.slots[i].num().leading_coeff();
            lam *= lc;
            w.slots[i] = w.slots[i] * RatFunc(1 / lc);
            sig += w.slots[i].num().to_string() + "|" +
                   w.slots[i].den().to_string() + ";";
          }
          w.slots[pos] = w.slots[pos] * RatFunc(lam);
          auto [it, fresh] = seen.emplace(std::move(sig), merged.size());
          if (fresh) {
            merged.push_back(std::move(w));
          } else {
            merged[it->second].slots[pos] += w.slots[pos];
            changed = true;
          }
        }
        words.clear();
        for (TensorWord& w : merged)
          if (!w.slots[pos].is_zero()) words.push_back(std::move(w));
      }
    }
    // Canonical scalar placement: every slot past 0 has monic numerator.
    for (TensorWord& w : words) {
      for (size_t i = 1; i < n; ++i) {
        Rational lc = w.slots[i].num().leading_coeff();
        if (lc != 1) {
          w.slots[i] = w.slots[i] * RatFunc(1 / lc);
          w.slots[0] = w.slots[0] * RatFunc(lc);
        }
      }
      terms_.push_back(std::move(w));
    }
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const TensorWord& a, const TensorWord& b) {
              return TensorWord::compare(a, b) < 0;
            });
}

NCElement NCElement::operator-() const {
  std::vector<TensorWord> words = terms_;
  for (TensorWord& w : words) w.slots[0] = -w.slots[0];
  return from_words(std::move(words));
}

NCElement NCElement::operator+(const NCElement& o) const {
  std::vector<TensorWord> words = terms_;
  words.insert(words.end(), o.terms_.begin(), o.terms_.end());
  return from_words(std::move(words));
}

NCElement NCElement::operator-(const NCElement& o) const {
  return *this + (-o);
}

NCElement NCElement::operator*(const NCElement& o) const {
  std::vector<TensorWord> words;
  words.reserve(terms_.size() * o.terms_.size());
  for (const TensorWord& a : terms_) {
    for (const TensorWord& b : o.terms_) {
      TensorWord w;
      w.skel = a.skel + b.skel;
      w.slots.reserve(a.slots.size() + b.slots.size() - 1);
      w.slots.insert(w.slots.end(), a.slots.begin(), a.slots.end() - 1);
      w.slots.push_back(a.slots.back() * b.slots.front());
      w.slots.insert(w.slots.end(), b.slots.begin() + 1, b.slots.end());
      words.push_back(std::move(w));
    }
  }
  return from_words(std::move(words));
}

NCElement NCElement::left_mul(const RatFunc& q) const {
  if (q.is_zero()) return NCElement();
  std::vector<TensorWord> words = terms_;
  for (TensorWord& w : words) w.slots.front() = q * w.slots.front();
  return from_words(std::move(words));
}

NCElement NCElement::right_mul(const RatFunc& q) const {
  if (q.is_zero()) return NCElement();
  std::vector<TensorWord> words = terms_;
  for (TensorWord& w : words) w.slots.back() = w.slots.back() * q;
  return from_words(std::move(words));
}

NCElement NCElement::pow(int e) const {
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative word power");
  NCElement r = constant(Rational(1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

int NCElement::degree() const {
  int d = kDegNegInf;
  for (const TensorWord& w : terms_) d = std::max(d, w.letters());
  return d;
}

int NCElement::weight_degree(int r, int s) const {
  if (r < 1 || s < 1)
    throw Error(ErrorCode::InvalidArgument, "weights must be >= 1");
  int d = kDegNegInf;
  for (const TensorWord& w : terms_) {
    int wx = 0, wy = 0;
    for (char c : w.skel) (c == 'x' ? wx : wy)++;
    d = std::max(d, r * wx + s * wy);
  }
  return d;
}

NCElement NCElement::highest_form() const {
  if (is_zero())
    throw Error(ErrorCode::ZeroElement, "highest form of the zero element");
  const int d = degree();
  std::vector<TensorWord> top;
  for (const TensorWord& w : terms_)
    if (w.letters() == d) top.push_back(w);
  return from_words(std::move(top));
}

bool NCElement::has_sandwich() const {
  for (const TensorWord& w : terms_)
    for (size_t i = 1; i + 1 < w.slots.size(); ++i)
      if (!w.slots[i].is_polynomial()) return true;
  return false;
}

int NCElement::right_z_degree() const {
  int d = kValPosInf;
  for (const TensorWord& w : terms_)
    d = std::min(d, w.right().valuation_at(0));
  return d;
}

int NCElement::left_z_degree() const {
  int d = kValPosInf;
  for (const TensorWord& w : terms_)
    d = std::min(d, w.left().valuation_at(0));
  return d;
}

bool NCElement::is_z_polynomial() const {
  for (const TensorWord& w : terms_)
    for (const RatFunc& s : w.slots)
      if (!s.is_polynomial()) return false;
  return true;
}

NCElement NCElement::shift_all_z(const Rational& c) const {
  std::vector<TensorWord> words = terms_;
  for (TensorWord& w : words)
    for (RatFunc& s : w.slots) s = s.shifted(c);
  return from_words(std::move(words));
}

NCElement NCElement::substitute(const NCElement& img_x,
                                const NCElement& img_y) const {
  NCElement sum;
  for (const TensorWord& w : terms_) {
    NCElement acc = constant(w.slots[0]);
    for (int i = 0; i < w.letters(); ++i) {
      const NCElement& img = w.skel[i] == 'x' ? img_x : img_y;
      acc = acc * img * constant(w.slots[i + 1]);
    }
    sum += acc;
  }
  return sum;
}

CommPoly NCElement::abelianize() const {
  CommPoly p;
  for (const TensorWord& w : terms_) {
    RatFunc c = RatFunc::one();
    for (const RatFunc& s : w.slots) c *= s;
    int dx = 0, dy = 0;
    for (char l : w.skel) (l == 'x' ? dx : dy)++;
    p += CommPoly(c, dx, dy);
  }
  return p;
}

std::string NCElement::to_string() const {
  if (terms_.empty()) return "0";
  auto slot_str = [](const RatFunc& q) {
    std::string s = q.to_string();
    if (s.find(' ') != std::string::npos || s[0] == '-') s = "(" + s + ")";
    return s;
  };
  std::ostringstream os;
  bool first = true;
  for (const TensorWord& w : terms_) {
    if (!first) os << " + ";
    first = false;
    bool started = false;
    if (!w.slots[0].is_one() || w.letters() == 0) {
      os << slot_str(w.slots[0]);
      started = true;
    }
    for (int i = 0; i < w.letters(); ++i) {
      if (started) os << " * ";
      os << w.skel[i];
      started = true;
      if (!w.slots[i + 1].is_one()) os << " * " << slot_str(w.slots[i + 1]);
    }
  }
  return os.str();
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  RatMatrix r(n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  RatMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Rational& c = at(i, k);
      if (c == 0) continue;
      for (int j = 0; j < n_; ++j) r.at(i, j) += c * o.at(k, j);
    }
  return r;
}

RatMatrix RatMatrix::scaled(const Rational& c) const {
  RatMatrix r(n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

bool RatMatrix::is_zero() const {
  for (const Rational& c : a_)
    if (c != 0) return false;
  return true;
}

int oracle_min_dim(const NCElement& a) {
  int d = a.degree();
  if (d <= 0) return 1;
  return (d + 3) / 2;  // ceil((d + 2) / 2)
}

RatMatrix eval_matrices(const NCElement& a, int dim, uint64_t seed) {
  if (dim < oracle_min_dim(a))
    throw Error(ErrorCode::InvalidArgument,
                "oracle dimension too small for degree " +
                    std::to_string(a.degree()));
  std::mt19937_64 rng(seed);
  auto rnd_entry = [&rng]() { return Rational(long(rng() % 19) - 9); };
  RatMatrix mx(dim), my(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      mx.at(i, j) = rnd_entry();
      my.at(i, j) = rnd_entry();
    }
  Rational c(long(rng() % 41) - 20, 1 + long(rng() % 3));
  c.canonicalize();
  for (const TensorWord& w : a.terms())
    for (const RatFunc& s : w.slots)
      if (s.den().eval(c) == 0)
        throw Error(ErrorCode::PoleHit,
                    "z sample hits a denominator root; re-seed");
  RatMatrix acc(dim);
  for (const TensorWord& w : a.terms()) {
    RatMatrix t = RatMatrix::identity(dim).scaled(w.slots[0].eval(c));
    for (int i = 0; i < w.letters(); ++i) {
      t = t * (w.skel[i] == 'x' ? mx : my);
      t = t.scaled(w.slots[i + 1].eval(c));
    }
    acc = acc + t;
  }
  return acc;
}

}  // namespace nagata
