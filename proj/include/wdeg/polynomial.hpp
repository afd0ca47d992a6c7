#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wdeg/rational.hpp"

namespace wdeg {

/// Variable names of a polynomial ring; polynomials refer to variables by
/// position, so the ring is mostly needed at the text boundary.
struct Ring {
  std::vector<std::string> vars;

  std::size_t arity() const { return vars.size(); }
  std::size_t index_of(const std::string& name) const;
  Ring extended(const std::string& extra) const;
  Ring restricted(const std::vector<std::size_t>& keep) const;
};

struct Monomial {
  std::vector<int> e;

  static Monomial one(std::size_t arity) { return Monomial{std::vector<int>(arity, 0)}; }
  int deg() const;
  int deg_on(const std::vector<char>& mask) const;
  bool is_one() const;
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
  std::size_t hash() const;
};

Monomial mul(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial div(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Total order on monomials: lex, grevlex, grevlex with a permuted variable
/// significance sequence, or a block elimination order (grevlex on the marked
/// variables first, grevlex on the rest as tie-break).
class MonomialOrder {
 public:
  MonomialOrder() : kind_(Kind::Grevlex), arity_(0) {}  // empty ring
  static MonomialOrder lex(std::size_t arity);
  static MonomialOrder grevlex(std::size_t arity);
  // Grevlex with `last` moved to the least significant position.
  static MonomialOrder grevlex_last(std::size_t arity, std::size_t last);
  static MonomialOrder elimination(std::size_t arity, const std::vector<char>& elim_mask);

  // > 0 if a > b, < 0 if a < b, 0 if equal.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  std::size_t arity() const { return arity_; }

  enum class Kind { Lex, Grevlex, Elimination };
  Kind kind() const { return kind_; }
  const std::vector<char>& elim_mask() const { return mask_; }

 private:
  MonomialOrder(Kind k, std::size_t arity) : kind_(k), arity_(arity) {}
  Kind kind_;
  std::size_t arity_;
  std::vector<std::size_t> seq_;  // significance sequence, most to least
  std::vector<char> mask_;
};

struct Term {
  Monomial m;
  Rational c;
  friend bool operator==(const Term& a, const Term& b) { return a.m == b.m && a.c == b.c; }
};

/// Sparse polynomial; terms are kept strictly descending under the order the
/// polynomial was built with, which every arithmetic helper takes explicitly.
class Polynomial {
 public:
  Polynomial() = default;
  static Polynomial zero() { return {}; }
  static Polynomial constant(std::size_t arity, const Rational& c);
  static Polynomial variable(std::size_t arity, std::size_t var);
  static Polynomial from_terms(std::vector<Term> terms, const MonomialOrder& ord);
  // Caller guarantees terms are strictly descending with nonzero coefficients.
  static Polynomial from_sorted_terms(std::vector<Term> terms);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  const std::vector<Term>& terms() const { return t_; }
  const Term& lt() const { return t_.front(); }
  std::size_t arity() const { return t_.empty() ? 0 : t_[0].m.e.size(); }
  int total_degree() const;
  bool is_homogeneous() const;
  bool uses_var(std::size_t var) const;

  Polynomial resorted(const MonomialOrder& ord) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.t_ == b.t_; }

 private:
  std::vector<Term> t_;
  friend Polynomial add(const Polynomial&, const Polynomial&, const MonomialOrder&);
  friend Polynomial mul_term(const Polynomial&, const Term&, const MonomialOrder&);
  friend Polynomial neg(const Polynomial&);
};

Polynomial add(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord);
Polynomial sub(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord);
Polynomial neg(const Polynomial& a);
Polynomial mul_term(const Polynomial& a, const Term& t, const MonomialOrder& ord);
Polynomial mul(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord);
Polynomial mul_scalar(const Polynomial& a, const Rational& c);
Polynomial monic(const Polynomial& a);

// Clears denominators and divides by the integer content; leading coefficient
// made positive. Matches the usual integer-primitive display of rational GBs.
Polynomial primitive_integer_form(const Polynomial& a);

Polynomial derivative(const Polynomial& a, std::size_t var, const MonomialOrder& ord);
Rational evaluate(const Polynomial& a, const std::vector<Rational>& point);
Polynomial substitute(const Polynomial& a, std::size_t var, const Polynomial& repl,
                      const MonomialOrder& ord);

// Text form with explicit '*' and '^', rationals as p/q; round-trips with
// parse_polynomial. Terms appear in the polynomial's stored order.
std::string to_string(const Polynomial& p, const Ring& ring);
Polynomial parse_polynomial(const std::string& text, const Ring& ring,
                            const MonomialOrder& ord);

}  // namespace wdeg
