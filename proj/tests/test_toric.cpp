#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "wdeg/toric.hpp"

using namespace wdeg;

namespace {

Budget unlimited() { return Budget::unlimited(); }

bool same_ideal(const Ideal& a, const Ideal& b) {
  if (a.ring.arity() != b.ring.arity()) return false;
  MonomialOrder ord = MonomialOrder::grevlex(a.ring.arity());
  Budget bud = unlimited();
  GroebnerBasis ga = buchberger(a, ord, bud);
  GroebnerBasis gb = buchberger(b, ord, bud);
  if (ga.basis.size() != gb.basis.size()) return false;
  for (std::size_t i = 0; i < ga.basis.size(); ++i)
    if (!(ga.basis[i] == gb.basis[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("integer kernel spans the rational kernel and is a lattice basis") {
  std::vector<std::vector<long>> A = {{1, 1, 1, 1}, {0, 1, 2, 3}};
  auto k = integer_kernel(A);
  REQUIRE(k.size() == 2);
  for (const auto& v : k)
    for (std::size_t i = 0; i < A.size(); ++i) {
      mpz_class s = 0;
      for (std::size_t j = 0; j < v.size(); ++j) s += A[i][j] * v[j];
      CHECK(s == 0);
    }
  // Saturated lattice: (1,-2,1,0) must be an integer combination; check it
  // solves over Z by verifying it is in the span with determinant-1 change.
  // Minimal check here: the kernel contains a vector with odd entries, so the
  // index is not divisible by 2 for this matrix.
  bool has_odd = false;
  for (const auto& v : k)
    for (const auto& x : v)
      if (x % 2 != 0) has_odd = true;
  CHECK(has_odd);
}

TEST_CASE("row space check") {
  CHECK(row_space_contains_ones({{1, 1, 1}, {0, 1, 2}}));
  CHECK(row_space_contains_ones({{2, 2, 2}}));
  CHECK_FALSE(row_space_contains_ones({{1, 0, 0}, {0, 1, 0}}));
}

TEST_CASE("scaled cubic curve ideal matches the displayed equations") {
  Budget b = unlimited();
  std::vector<std::vector<long>> A = {{1, 1, 1, 1}, {0, 1, 2, 3}};
  std::vector<Rational> lam = {1, 3, 3, 1};
  Ideal i = toric_ideal_lattice(A, lam, b);
  Ring r = i.ring;
  MonomialOrder ord = MonomialOrder::grevlex(4);
  Ideal displayed{r, {parse_polynomial("3*p0*p2-p1^2", r, ord),
                      parse_polynomial("3*p1*p3-p2^2", r, ord),
                      parse_polynomial("9*p0*p3-p1*p2", r, ord)}};
  CHECK(same_ideal(i, displayed));
}

TEST_CASE("lattice and elimination routes agree") {
  Budget b = unlimited();
  std::vector<std::vector<long>> cubic = {{1, 1, 1, 1}, {0, 1, 2, 3}};
  std::vector<Rational> lam3 = {1, 3, 3, 1};
  CHECK(same_ideal(toric_ideal_lattice(cubic, lam3, b),
                   toric_ideal_elimination(cubic, lam3, b)));

  std::vector<std::vector<long>> quartic = {{1, 1, 1, 1, 1}, {0, 1, 2, 3, 4}};
  std::vector<Rational> lam4 = {1, 4, 6, 4, 1};
  CHECK(same_ideal(toric_ideal_lattice(quartic, lam4, b),
                   toric_ideal_elimination(quartic, lam4, b)));

  std::vector<std::vector<long>> segre = {{1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}};
  std::vector<Rational> ones(4, Rational(1));
  CHECK(same_ideal(toric_ideal_lattice(segre, ones, b),
                   toric_ideal_elimination(segre, ones, b)));
}

TEST_CASE("full-rank matrix gives the zero ideal, rank-one map gives a point") {
  Budget b = unlimited();
  // Image of the identity matrix map is dense: no relations.
  Ideal dense = toric_ideal_lattice({{1, 0}, {0, 1}}, {1, 1}, b);
  CHECK(dense.gens.empty());
  // A single all-ones row maps onto the diagonal point (1:1).
  Ideal point = toric_ideal_lattice({{1, 1}}, {1, 1}, b);
  REQUIRE(point.gens.size() == 1);
  CHECK(to_string(primitive_integer_form(point.gens[0]), point.ring) == "p0-p1");
}

TEST_CASE("scaled quartic curve: dimension and degree") {
  Budget b = unlimited();
  std::vector<std::vector<long>> A = {{1, 1, 1, 1, 1}, {0, 1, 2, 3, 4}};
  ToricModel m = toric_model_from_matrix(A, {1, 4, 6, 4, 1}, "quartic", b);
  CHECK(m.dim_projective == 1);
  CHECK(dimension(m.ideal, b) == 2);  // cone
  CHECK(homogeneous_degree(m.ideal, b) == 4);
  CHECK(parametrization_annihilates(m));
}

TEST_CASE("scroll(3) is the unscaled cubic curve") {
  Budget b = unlimited();
  ToricModel s = scroll({3});
  CHECK(s.dim_projective == 1);
  CHECK(s.ideal.gens.size() == 3);
  CHECK(same_ideal(s.ideal, toric_ideal_lattice(s.A, s.scaling, b)));
  CHECK(homogeneous_degree(s.ideal, b) == 3);
  CHECK(parametrization_annihilates(s));
}

TEST_CASE("scroll degrees equal the block sum") {
  Budget b = unlimited();
  CHECK(homogeneous_degree(scroll({1, 2}).ideal, b) == 3);
  CHECK(homogeneous_degree(scroll({2, 3}).ideal, b) == 5);
  CHECK(homogeneous_degree(scroll({1, 1, 1}).ideal, b) == 3);
  CHECK(homogeneous_degree(scroll({2, 4}).ideal, b) == 6);
  CHECK(scroll({1, 2}).dim_projective == 2);
  CHECK(scroll({1, 1, 1}).dim_projective == 3);
}

TEST_CASE("scroll minors agree with the matrix route") {
  Budget b = unlimited();
  for (const auto& ns : {std::vector<long>{1, 2}, std::vector<long>{2, 2}}) {
    ToricModel s = scroll(ns);
    CHECK(same_ideal(s.ideal, toric_ideal_lattice(s.A, s.scaling, b)));
    CHECK(parametrization_annihilates(s));
  }
}

TEST_CASE("hirzebruch surfaces") {
  Budget b = unlimited();
  ToricModel h12 = hirzebruch(1, 2);
  CHECK(h12.ring.arity() == 5);  // P^4
  CHECK(h12.dim_projective == 2);
  CHECK(homogeneous_degree(h12.ideal, b) == 3);
  CHECK(same_ideal(h12.ideal, toric_ideal_lattice(h12.A, h12.scaling, b)));
  CHECK(parametrization_annihilates(h12));

  ToricModel h11 = hirzebruch(1, 1);
  CHECK(h11.ring.arity() == 4);
  CHECK(homogeneous_degree(h11.ideal, b) == 2);  // the Segre quadric

  ToricModel h24 = hirzebruch(2, 4);
  CHECK(h24.ring.arity() == 8);  // P^7
  CHECK(homogeneous_degree(h24.ideal, b) == 6);
  CHECK_THROWS(hirzebruch(3, 2));
}

TEST_CASE("star tree with two binary leaves and binary hub") {
  Budget b = unlimited();
  ToricModel m = star_tree({2, 2}, 2, b);
  CHECK(m.ring.arity() == 8);
  CHECK(m.dim_projective == 5);
  REQUIRE(m.ideal.gens.size() == 2);
  for (const auto& g : m.ideal.gens) {
    CHECK(g.terms().size() == 2);
    CHECK(g.total_degree() == 2);
  }
  CHECK(parametrization_annihilates(m));
  // The slice sum equals the toric ideal of the full parameter matrix.
  CHECK(same_ideal(m.ideal, toric_ideal_lattice(m.A, m.scaling, b)));
}

TEST_CASE("star tree slice sum matches the matrix route on (2,3) leaves") {
  Budget b = unlimited();
  ToricModel m = star_tree({2, 3}, 2, b);
  CHECK(m.ring.arity() == 12);
  CHECK(same_ideal(m.ideal, toric_ideal_lattice(m.A, m.scaling, b)));
}

TEST_CASE("single leaf star tree has no relations") {
  Budget b = unlimited();
  ToricModel m = star_tree({2}, 3, b);
  CHECK(m.ideal.gens.empty());
}

TEST_CASE("binary four-path") {
  Budget b = unlimited();
  ToricModel m = path4_binary(b);
  CHECK(m.ring.arity() == 16);
  CHECK(m.dim_projective == 7);
  for (const auto& g : m.ideal.gens) CHECK(g.terms().size() == 2);  // binomial
  CHECK(homogeneous_degree(m.ideal, b) == 34);
  CHECK(parametrization_annihilates(m));
}

TEST_CASE("binary four-cycle") {
  Budget b = unlimited();
  ToricModel m = cycle4_binary(b);
  CHECK(m.ring.arity() == 16);
  CHECK(m.dim_projective == 8);
  for (const auto& g : m.ideal.gens) CHECK(g.terms().size() == 2);
  CHECK(homogeneous_degree(m.ideal, b) == 64);
  // The cycle ideal differs from the path ideal.
  CHECK_FALSE(same_ideal(m.ideal, path4_binary(b).ideal));
}

TEST_CASE("no-three-way interaction models") {
  Budget b = unlimited();
  ToricModel m222 = no3way(2, 2, 2, b);
  CHECK(m222.dim_projective == 6);
  REQUIRE(m222.ideal.gens.size() == 1);
  CHECK(to_string(m222.ideal.gens[0], m222.ring) == "p0*p3*p5*p6-p1*p2*p4*p7");
  CHECK(homogeneous_degree(m222.ideal, b) == 4);
  CHECK(parametrization_annihilates(m222));

  ToricModel m223 = no3way(2, 2, 3, b);
  CHECK(m223.ring.arity() == 12);
  CHECK(m223.dim_projective == 9);
  CHECK(homogeneous_degree(m223.ideal, b) == 12);
}

TEST_CASE("projective dimension equals cone dimension minus one") {
  Budget b = unlimited();
  for (const ToricModel& m : {scroll({1, 2}), hirzebruch(1, 3)}) {
    CHECK(dimension(m.ideal, b) == m.dim_projective + 1);
  }
  ToricModel st = star_tree({2, 2}, 2, b);
  CHECK(dimension(st.ideal, b) == st.dim_projective + 1);
}
