#include "wdeg/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace wdeg {

std::size_t Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return i;
  throw std::invalid_argument("ring: unknown variable '" + name + "'");
}

Ring Ring::extended(const std::string& extra) const {
  Ring r = *this;
  r.vars.push_back(extra);
  return r;
}

Ring Ring::restricted(const std::vector<std::size_t>& keep) const {
  Ring r;
  for (auto i : keep) r.vars.push_back(vars.at(i));
  return r;
}

int Monomial::deg() const {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

int Monomial::deg_on(const std::vector<char>& mask) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (mask[i]) d += e[i];
  return d;
}

bool Monomial::is_one() const {
  for (int x : e)
    if (x) return false;
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int x : e) h = (h ^ static_cast<std::size_t>(x + 7)) * 1099511628211ull;
  return h;
}

Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
  return r;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial div(const Monomial& b, const Monomial& a) {
  Monomial r = b;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] -= a.e[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

MonomialOrder MonomialOrder::lex(std::size_t arity) {
  MonomialOrder o(Kind::Lex, arity);
  o.seq_.resize(arity);
  std::iota(o.seq_.begin(), o.seq_.end(), 0);
  return o;
}

MonomialOrder MonomialOrder::grevlex(std::size_t arity) {
  MonomialOrder o(Kind::Grevlex, arity);
  o.seq_.resize(arity);
  std::iota(o.seq_.begin(), o.seq_.end(), 0);
  return o;
}

MonomialOrder MonomialOrder::grevlex_last(std::size_t arity, std::size_t last) {
  MonomialOrder o(Kind::Grevlex, arity);
  for (std::size_t i = 0; i < arity; ++i)
    if (i != last) o.seq_.push_back(i);
  o.seq_.push_back(last);
  return o;
}

MonomialOrder MonomialOrder::elimination(std::size_t arity, const std::vector<char>& mask) {
  MonomialOrder o(Kind::Elimination, arity);
  o.mask_ = mask;
  for (std::size_t i = 0; i < arity; ++i)
    if (mask[i]) o.seq_.push_back(i);
  for (std::size_t i = 0; i < arity; ++i)
    if (!mask[i]) o.seq_.push_back(i);
  return o;
}

namespace {

// Grevlex on the positions seq[from..to): higher total degree wins, ties are
// broken at the least significant differing position, smaller exponent wins.
int grevlex_compare(const Monomial& a, const Monomial& b,
                    const std::vector<std::size_t>& seq, std::size_t from, std::size_t to) {
  int da = 0, db = 0;
  for (std::size_t k = from; k < to; ++k) {
    da += a.e[seq[k]];
    db += b.e[seq[k]];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = to; k-- > from;) {
    int ea = a.e[seq[k]], eb = b.e[seq[k]];
    if (ea != eb) return ea > eb ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (auto i : seq_) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
      }
      return 0;
    case Kind::Grevlex:
      return grevlex_compare(a, b, seq_, 0, seq_.size());
    case Kind::Elimination: {
      std::size_t nelim = 0;
      for (char c : mask_) nelim += c ? 1 : 0;
      int c1 = grevlex_compare(a, b, seq_, 0, nelim);
      if (c1 != 0) return c1;
      return grevlex_compare(a, b, seq_, nelim, seq_.size());
    }
  }
  return 0;
}

Polynomial Polynomial::constant(std::size_t arity, const Rational& c) {
  Polynomial p;
  if (!c.is_zero()) p.t_.push_back({Monomial::one(arity), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t var) {
  Polynomial p;
  Monomial m = Monomial::one(arity);
  m.e[var] = 1;
  p.t_.push_back({std::move(m), Rational(1)});
  return p;
}

Polynomial Polynomial::from_sorted_terms(std::vector<Term> terms) {
  Polynomial p;
  p.t_ = std::move(terms);
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms, const MonomialOrder& ord) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& x, const Term& y) { return ord.greater(x.m, y.m); });
  Polynomial p;
  for (auto& t : terms) {
    if (t.c.is_zero()) continue;
    if (!p.t_.empty() && p.t_.back().m == t.m) {
      p.t_.back().c += t.c;
      if (p.t_.back().c.is_zero()) p.t_.pop_back();
    } else {
      p.t_.push_back(std::move(t));
    }
  }
  return p;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : t_) d = std::max(d, t.m.deg());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (t_.empty()) return true;
  int d = t_[0].m.deg();
  for (const auto& t : t_)
    if (t.m.deg() != d) return false;
  return true;
}

bool Polynomial::uses_var(std::size_t var) const {
  for (const auto& t : t_)
    if (t.m.e[var] > 0) return true;
  return false;
}

Polynomial Polynomial::resorted(const MonomialOrder& ord) const {
  return from_terms(t_, ord);
}

Polynomial add(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord) {
  Polynomial r;
  r.t_.reserve(a.t_.size() + b.t_.size());
  std::size_t i = 0, j = 0;
  while (i < a.t_.size() && j < b.t_.size()) {
    int c = ord.compare(a.t_[i].m, b.t_[j].m);
    if (c > 0) {
      r.t_.push_back(a.t_[i++]);
    } else if (c < 0) {
      r.t_.push_back(b.t_[j++]);
    } else {
      Rational s = a.t_[i].c + b.t_[j].c;
      if (!s.is_zero()) r.t_.push_back({a.t_[i].m, std::move(s)});
      ++i, ++j;
    }
  }
  while (i < a.t_.size()) r.t_.push_back(a.t_[i++]);
  while (j < b.t_.size()) r.t_.push_back(b.t_[j++]);
  return r;
}

Polynomial sub(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord) {
  return add(a, neg(b), ord);
}

Polynomial neg(const Polynomial& a) {
  Polynomial r = a;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

Polynomial mul_term(const Polynomial& a, const Term& t, const MonomialOrder& ord) {
  (void)ord;  // multiplicativity keeps the term order intact
  Polynomial r = a;
  if (t.c.is_zero()) return Polynomial::zero();
  for (auto& x : r.t_) {
    x.m = mul(x.m, t.m);
    x.c *= t.c;
  }
  return r;
}

Polynomial mul(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord) {
  std::vector<Term> acc;
  acc.reserve(a.terms().size() * b.terms().size());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) acc.push_back({mul(ta.m, tb.m), ta.c * tb.c});
  return Polynomial::from_terms(std::move(acc), ord);
}

Polynomial mul_scalar(const Polynomial& a, const Rational& c) {
  if (c.is_zero()) return Polynomial::zero();
  std::vector<Term> ts = a.terms();
  for (auto& t : ts) t.c *= c;
  return Polynomial::from_sorted_terms(std::move(ts));
}

Polynomial monic(const Polynomial& a) {
  if (a.is_zero()) return a;
  return mul_scalar(a, a.lt().c.inv());
}

Polynomial primitive_integer_form(const Polynomial& a) {
  if (a.is_zero()) return a;
  mpz_class den_lcm = 1;
  for (const auto& t : a.terms()) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), t.c.den().get_mpz_t());
    den_lcm = l;
  }
  Polynomial r = mul_scalar(a, Rational(den_lcm));
  mpz_class g = 0;
  for (const auto& t : r.terms()) {
    mpz_class gg;
    mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), t.c.num().get_mpz_t());
    g = gg;
  }
  if (g != 0) r = mul_scalar(r, Rational(mpz_class(1), g));
  if (r.lt().c.sign() < 0) r = neg(r);
  return r;
}

Polynomial derivative(const Polynomial& a, std::size_t var, const MonomialOrder& ord) {
  std::vector<Term> acc;
  for (const auto& t : a.terms()) {
    if (t.m.e[var] == 0) continue;
    Term d = t;
    d.c *= Rational(t.m.e[var]);
    d.m.e[var] -= 1;
    acc.push_back(std::move(d));
  }
  return Polynomial::from_terms(std::move(acc), ord);
}

Rational evaluate(const Polynomial& a, const std::vector<Rational>& point) {
  Rational s;
  for (const auto& t : a.terms()) {
    Rational v = t.c;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (int k = 0; k < t.m.e[i]; ++k) v *= point[i];
    s += v;
  }
  return s;
}

Polynomial substitute(const Polynomial& a, std::size_t var, const Polynomial& repl,
                      const MonomialOrder& ord) {
  std::vector<Polynomial> powers = {Polynomial::constant(ord.arity(), Rational(1))};
  Polynomial out;
  for (const auto& t : a.terms()) {
    int k = t.m.e[var];
    while (static_cast<int>(powers.size()) <= k)
      powers.push_back(mul(powers.back(), repl, ord));
    Term rest = t;
    rest.m.e[var] = 0;
    out = add(out, mul_term(powers[k], rest, ord), ord);
  }
  return out;
}

std::string to_string(const Polynomial& p, const Ring& ring) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.c;
    if (first) {
      if (c.sign() < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c.sign() < 0 ? "-" : "+";
      if (c.sign() < 0) c = -c;
    }
    first = false;
    bool need_star = false;
    if (!c.is_one() || t.m.is_one()) {
      out += c.str();
      need_star = true;
    }
    for (std::size_t i = 0; i < t.m.e.size(); ++i) {
      if (t.m.e[i] == 0) continue;
      if (need_star) out += "*";
      need_star = true;
      out += ring.vars[i];
      if (t.m.e[i] > 1) out += "^" + std::to_string(t.m.e[i]);
    }
  }
  return out;
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return s[pos];
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Ring& ring,
                            const MonomialOrder& ord) {
  Lexer lx{text};
  std::vector<Term> terms;
  int sign = 1;
  bool expect_term = true;
  while (!lx.eof()) {
    char c = lx.peek();
    if (c == '+') {
      ++lx.pos;
      expect_term = true;
      continue;
    }
    if (c == '-') {
      ++lx.pos;
      sign = -sign;
      expect_term = true;
      continue;
    }
    if (!expect_term) throw std::invalid_argument("polynomial parse: missing operator");
    // term: [number] (['*'] var ['^' int])*
    Rational coef(1);
    Monomial m = Monomial::one(ring.arity());
    bool saw_factor = false;
    for (;;) {
      if (lx.eof()) break;
      char ch = lx.peek();
      if (ch == '*') {
        ++lx.pos;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t start = lx.pos;
        while (lx.pos < lx.s.size() &&
               (std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '/'))
          ++lx.pos;
        coef *= Rational::parse(lx.s.substr(start, lx.pos - start));
        saw_factor = true;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t start = lx.pos;
        while (lx.pos < lx.s.size() &&
               (std::isalnum(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '_'))
          ++lx.pos;
        std::size_t var = ring.index_of(lx.s.substr(start, lx.pos - start));
        int exp = 1;
        lx.skip_ws();
        if (lx.pos < lx.s.size() && lx.s[lx.pos] == '^') {
          ++lx.pos;
          lx.skip_ws();
          std::size_t es = lx.pos;
          while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
            ++lx.pos;
          if (es == lx.pos) throw std::invalid_argument("polynomial parse: bad exponent");
          exp = std::stoi(lx.s.substr(es, lx.pos - es));
        }
        m.e[var] += exp;
        saw_factor = true;
        continue;
      }
      break;  // '+', '-' or garbage; term ends
    }
    if (!saw_factor) throw std::invalid_argument("polynomial parse: empty term");
    terms.push_back({std::move(m), sign < 0 ? -coef : coef});
    sign = 1;
    expect_term = false;
  }
  if (expect_term && !terms.empty())
    throw std::invalid_argument("polynomial parse: trailing operator");
  return Polynomial::from_terms(std::move(terms), ord);
}

}  // namespace wdeg
