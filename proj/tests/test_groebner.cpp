#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "wdeg/groebner.hpp"
#include "wdeg/rng.hpp"

using namespace wdeg;

namespace {

Budget unlimited() { return Budget::unlimited(); }

Ring ring_xy() { return Ring{{"x", "y"}}; }

Ideal parse_ideal(const Ring& r, const std::vector<std::string>& gens,
                  const MonomialOrder& ord) {
  Ideal i{r, {}};
  for (const auto& g : gens) i.gens.push_back(parse_polynomial(g, r, ord));
  return i;
}

// The scaled cubic curve cut by two affine hyperplanes; the intersection
// is three points.
Ideal cubic_slice_ideal(const MonomialOrder& ord) {
  Ring r{{"p0", "p1", "p2", "p3"}};
  return parse_ideal(r,
                     {"3*p0*p2-p1^2", "3*p1*p3-p2^2", "9*p0*p3-p1*p2",
                      "p0+p1+p2+p3-1", "p0+p2+p3-1/2"},
                     ord);
}

std::vector<std::string> primitive_strings(const GroebnerBasis& gb) {
  std::vector<std::string> out;
  for (const auto& g : gb.basis) out.push_back(to_string(primitive_integer_form(g), gb.ring));
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial spoly_of(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  Monomial l = lcm(f.lt().m, g.lt().m);
  Term tf{div(l, f.lt().m), g.lt().c};
  Term tg{div(l, g.lt().m), f.lt().c};
  return sub(mul_term(f, tf, ord), mul_term(g, tg, ord), ord);
}

}  // namespace

TEST_CASE("buchberger on a principal ideal") {
  Ring r{{"x"}};
  MonomialOrder ord = MonomialOrder::lex(1);
  Budget b = unlimited();
  GroebnerBasis gb = buchberger(parse_ideal(r, {"x"}, ord), ord, b);
  REQUIRE(gb.basis.size() == 1);
  CHECK(to_string(gb.basis[0], r) == "x");
}

TEST_CASE("cubic slice system: exact reduced lex basis") {
  MonomialOrder lex = MonomialOrder::lex(4);
  Budget b = unlimited();
  GroebnerBasis gb = buchberger(cubic_slice_ideal(lex), lex, b);
  REQUIRE(gb.basis.size() == 4);
  std::vector<std::string> expect = {"216*p3^3-540*p3^2+18*p3-1", "20*p2+36*p3^2-72*p3-3",
                                     "2*p1-1", "20*p0-36*p3^2+92*p3-7"};
  std::sort(expect.begin(), expect.end());
  CHECK(primitive_strings(gb) == expect);
}

TEST_CASE("hand-checked lex basis of <x^2-y, y^2-x>") {
  MonomialOrder lex = MonomialOrder::lex(2);
  Budget b = unlimited();
  GroebnerBasis gb = buchberger(parse_ideal(ring_xy(), {"x^2-y", "y^2-x"}, lex), lex, b);
  std::vector<std::string> expect = {"x-y^2", "y^4-y"};
  std::sort(expect.begin(), expect.end());
  CHECK(primitive_strings(gb) == expect);
}

TEST_CASE("every s-polynomial of a basis reduces to zero") {
  MonomialOrder ord = MonomialOrder::grevlex(4);
  Budget b = unlimited();
  GroebnerBasis gb = buchberger(cubic_slice_ideal(ord), ord, b);
  for (std::size_t i = 0; i < gb.basis.size(); ++i)
    for (std::size_t j = i + 1; j < gb.basis.size(); ++j) {
      Polynomial s = spoly_of(gb.basis[i], gb.basis[j], ord);
      CHECK(normal_form(s, gb, b).is_zero());
    }
}

TEST_CASE("normal form basics") {
  MonomialOrder lex = MonomialOrder::lex(4);
  Budget b = unlimited();
  Ideal i = cubic_slice_ideal(lex);
  GroebnerBasis gb = buchberger(i, lex, b);
  for (const auto& g : i.gens) CHECK(normal_form(g, gb, b).is_zero());
  Polynomial one = Polynomial::constant(4, Rational(1));
  CHECK(normal_form(one, gb, b) == one);
  Polynomial p1 = Polynomial::variable(4, 1);
  CHECK(normal_form(p1, gb, b) == Polynomial::constant(4, Rational(1, 2)));
}

TEST_CASE("normal form does not depend on generator order") {
  MonomialOrder lex = MonomialOrder::lex(4);
  Budget b = unlimited();
  Ideal i = cubic_slice_ideal(lex);
  GroebnerBasis gb1 = buchberger(i, lex, b);
  std::reverse(i.gens.begin(), i.gens.end());
  GroebnerBasis gb2 = buchberger(i, lex, b);
  REQUIRE(gb1.basis.size() == gb2.basis.size());
  for (std::size_t k = 0; k < gb1.basis.size(); ++k) CHECK(gb1.basis[k] == gb2.basis[k]);
  Ring r{{"p0", "p1", "p2", "p3"}};
  Polynomial f = parse_polynomial("p0^2*p3+5*p1*p2-1/3", r, lex);
  CHECK(normal_form(f, gb1, b) == normal_form(f, gb2, b));
}

TEST_CASE("reduced basis is invariant under scaling generators") {
  MonomialOrder ord = MonomialOrder::grevlex(4);
  Budget b = unlimited();
  Ideal i = cubic_slice_ideal(ord);
  GroebnerBasis gb1 = buchberger(i, ord, b);
  for (auto& g : i.gens) g = mul_scalar(g, Rational(-7, 3));
  GroebnerBasis gb2 = buchberger(i, ord, b);
  REQUIRE(gb1.basis.size() == gb2.basis.size());
  for (std::size_t k = 0; k < gb1.basis.size(); ++k) CHECK(gb1.basis[k] == gb2.basis[k]);
}

TEST_CASE("eliminate a parameter") {
  Ring r{{"t", "x", "y"}};
  MonomialOrder ord = MonomialOrder::grevlex(3);
  Ideal i = parse_ideal(r, {"t-x", "t^2-y"}, ord);
  Budget b = unlimited();
  Ideal e = eliminate(i, {0}, b);
  REQUIRE(e.gens.size() == 1);
  CHECK(to_string(primitive_integer_form(e.gens[0]), r) == "x^2-y");
}

TEST_CASE("eliminated generators vanish under the parametrization") {
  Ring r{{"t", "x", "y"}};
  MonomialOrder ord = MonomialOrder::grevlex(3);
  Ideal i = parse_ideal(r, {"t-x", "t^2-y"}, ord);
  Budget b = unlimited();
  Ideal e = eliminate(i, {0}, b);
  Polynomial xt = parse_polynomial("t", r, ord);
  Polynomial yt = parse_polynomial("t^2", r, ord);
  for (const auto& g : e.gens) {
    Polynomial s = substitute(substitute(g, 1, xt, ord), 2, yt, ord);
    CHECK(s.is_zero());
  }
}

TEST_CASE("saturation by a polynomial") {
  MonomialOrder ord = MonomialOrder::grevlex(2);
  Budget b = unlimited();
  {
    Ideal i = parse_ideal(ring_xy(), {"x*y"}, ord);
    Ideal s = saturate(i, parse_polynomial("x", ring_xy(), ord), b);
    REQUIRE(s.gens.size() == 1);
    CHECK(to_string(s.gens[0], ring_xy()) == "y");
  }
  {
    Ideal i = parse_ideal(ring_xy(), {"x^2"}, ord);
    Ideal s = saturate(i, parse_polynomial("x", ring_xy(), ord), b);
    REQUIRE(s.gens.size() == 1);
    CHECK(s.gens[0].is_constant());
  }
}

TEST_CASE("variable saturation matches the auxiliary-variable route") {
  Ring r{{"p0", "p1", "p2", "p3"}};
  MonomialOrder ord = MonomialOrder::grevlex(4);
  Ideal pre = parse_ideal(r, {"3*p0*p2-p1^2", "3*p1*p3-p2^2"}, ord);
  Budget b = unlimited();
  Ideal via_vars = saturate_by_variables(pre, {0, 1, 2, 3}, b);
  Ideal via_trick = pre;
  for (std::size_t v = 0; v < 4; ++v)
    via_trick = saturate(via_trick, Polynomial::variable(4, v), b);
  GroebnerBasis g1 = buchberger(via_vars, ord, b);
  GroebnerBasis g2 = buchberger(via_trick, ord, b);
  REQUIRE(g1.basis.size() == g2.basis.size());
  for (std::size_t k = 0; k < g1.basis.size(); ++k) CHECK(g1.basis[k] == g2.basis[k]);
  CHECK(g1.basis.size() == 3);
  // Same ideal as the three displayed quadrics of the scaled cubic curve.
  for (const auto& s : {"3*p0*p2-p1^2", "3*p1*p3-p2^2", "9*p0*p3-p1*p2"})
    CHECK(normal_form(parse_polynomial(s, r, ord), g1, b).is_zero());
  Ideal displayed = parse_ideal(r, {"3*p0*p2-p1^2", "3*p1*p3-p2^2", "9*p0*p3-p1*p2"}, ord);
  GroebnerBasis g3 = buchberger(displayed, ord, b);
  REQUIRE(g3.basis.size() == g1.basis.size());
  for (std::size_t k = 0; k < g1.basis.size(); ++k) CHECK(g1.basis[k] == g3.basis[k]);
}

TEST_CASE("dimension") {
  Budget b = unlimited();
  CHECK(dimension(cubic_slice_ideal(MonomialOrder::grevlex(4)), b) == 0);
  Ring r4{{"p0", "p1", "p2", "p3"}};
  Ideal zero{r4, {}};
  CHECK(dimension(zero, b) == 4);
  MonomialOrder ord = MonomialOrder::grevlex(4);
  Ideal cubic = parse_ideal(r4, {"3*p0*p2-p1^2", "3*p1*p3-p2^2", "9*p0*p3-p1*p2"}, ord);
  CHECK(dimension(cubic, b) == 2);  // affine cone over a projective curve
  Ideal improper = parse_ideal(r4, {"p0", "1-p0"}, ord);
  CHECK(dimension(improper, b) == -1);
}

TEST_CASE("degree of zero-dimensional ideals") {
  Budget b = unlimited();
  CHECK(degree_zero_dim(cubic_slice_ideal(MonomialOrder::grevlex(4)), b) == 3);
  MonomialOrder ord = MonomialOrder::grevlex(2);
  CHECK(degree_zero_dim(parse_ideal(ring_xy(), {"x-1", "y-2"}, ord), b) == 1);
  CHECK(degree_zero_dim(parse_ideal(ring_xy(), {"x^2-1", "y^3-1"}, ord), b) == 6);
  CHECK_THROWS_AS(degree_zero_dim(parse_ideal(ring_xy(), {"x-1"}, ord), b),
                  NotZeroDimensional);
}

TEST_CASE("projective degree via the hilbert numerator") {
  Budget b = unlimited();
  Ring r4{{"p0", "p1", "p2", "p3"}};
  MonomialOrder ord = MonomialOrder::grevlex(4);
  Ideal cubic = parse_ideal(r4, {"3*p0*p2-p1^2", "3*p1*p3-p2^2", "9*p0*p3-p1*p2"}, ord);
  CHECK(homogeneous_degree(cubic, b) == 3);
  Ideal zero{r4, {}};
  CHECK(homogeneous_degree(zero, b) == 1);  // the whole projective space
  Ideal quadric = parse_ideal(r4, {"p0*p3-p1*p2"}, ord);
  CHECK(homogeneous_degree(quadric, b) == 2);
  CHECK_THROWS_AS(homogeneous_degree(parse_ideal(ring_xy(), {"x-1"}, ord), b),
                  NotHomogeneous);
}

TEST_CASE("dimension and degree invariant under generator shuffling") {
  Budget b = unlimited();
  Ring r4{{"p0", "p1", "p2", "p3"}};
  MonomialOrder ord = MonomialOrder::grevlex(4);
  Ideal cubic = parse_ideal(r4, {"3*p0*p2-p1^2", "3*p1*p3-p2^2", "9*p0*p3-p1*p2"}, ord);
  Ideal shuffled = cubic;
  std::swap(shuffled.gens[0], shuffled.gens[2]);
  shuffled.gens[1] = mul_scalar(shuffled.gens[1], Rational(5, 7));
  CHECK(dimension(cubic, b) == dimension(shuffled, b));
  CHECK(homogeneous_degree(cubic, b) == homogeneous_degree(shuffled, b));
}

TEST_CASE("timeout surfaces instead of hanging") {
  Ring r{{"x", "y", "z", "w"}};
  MonomialOrder ord = MonomialOrder::grevlex(4);
  Ideal i = parse_ideal(
      r, {"x^4*y-z*w^2+3*x", "y^3*z^2-x*w^3-1", "z^4-x^2*y*w+7*y"}, ord);
  Budget tiny(25, std::chrono::milliseconds(100000));
  CHECK_THROWS_AS(buchberger(i, ord, tiny), TimeoutError);
}

TEST_CASE("polynomial text round-trip") {
  Ring r{{"p0", "p1", "p2", "p3"}};
  MonomialOrder ord = MonomialOrder::grevlex(4);
  SplitMix64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Term> ts;
    int nterms = 1 + static_cast<int>(rng.next() % 6);
    for (int t = 0; t < nterms; ++t) {
      Monomial m = Monomial::one(4);
      for (int v = 0; v < 4; ++v) m.e[v] = static_cast<int>(rng.next() % 4);
      ts.push_back({m, Rational(rng.nonzero_small_int(), rng.positive_int(9))});
    }
    Polynomial p = Polynomial::from_terms(std::move(ts), ord);
    if (p.is_zero()) continue;
    Polynomial q = parse_polynomial(to_string(p, r), r, ord);
    CHECK(p == q);
  }
  CHECK(parse_polynomial("216*p3^3-540*p3^2+18*p3-1", r, ord) ==
        parse_polynomial("-1+18*p3+216*p3^3-540*p3^2", r, ord));
}

TEST_CASE("linear reduction substitutes pivot variables") {
  Ring r{{"p0", "p1", "p2", "p3"}};
  MonomialOrder ord = MonomialOrder::grevlex(4);
  std::vector<Polynomial> linear = {
      parse_polynomial("p0+p1+p2+p3-1", r, ord),
      parse_polynomial("p0+p2+p3-1/2", r, ord),
  };
  LinearReduction red = reduce_by_linear(r, linear);
  REQUIRE(red.consistent);
  CHECK(red.reduced_ring.arity() == 2);
  MonomialOrder rord = MonomialOrder::grevlex(2);
  for (const auto& l : linear) CHECK(apply_linear_reduction(red, l, rord).is_zero());
  std::vector<Polynomial> bad = {parse_polynomial("p0-1", r, ord),
                                 parse_polynomial("p0-2", r, ord)};
  CHECK_FALSE(reduce_by_linear(r, bad).consistent);
}
