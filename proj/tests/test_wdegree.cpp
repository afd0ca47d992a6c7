#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wdeg/wdegree.hpp"

using namespace wdeg;

namespace {

Budget unlimited() { return Budget::unlimited(); }

ToricModel scaled_cubic(Budget& b) {
  return toric_model_from_matrix({{1, 1, 1, 1}, {0, 1, 2, 3}}, {1, 3, 3, 1},
                                 "binomial_cubic", b);
}

const Face& find_edge(const FaceLattice& lat, const RatVec& v1, const RatVec& v2) {
  for (const auto& f : lat.faces(1)) {
    std::vector<RatVec> vs;
    for (auto i : f.vertex_indices) vs.push_back(lat.polytope().vertices[i]);
    if ((vs[0] == v1 && vs[1] == v2) || (vs[0] == v2 && vs[1] == v1)) return f;
  }
  throw std::logic_error("edge not found");
}

}  // namespace

TEST_CASE("affine constraints for the cubic edge problem") {
  RatVec mu = {Rational(1, 6), Rational(1, 2), Rational(1, 6), Rational(1, 6)};
  std::vector<RatVec> span = {{0, 0, 1, -1}, {1, 0, 0, -1}};
  auto cons = affine_constraints(mu, span);
  REQUIRE(cons.size() == 2);
  Ring r{{"p0", "p1", "p2", "p3"}};
  CHECK(to_string(cons[0], r) == "p0+p1+p2+p3-1");
  CHECK(to_string(cons[1], r) == "p0+p2+p3-1/2");
  // Both vanish on mu + span.
  for (const auto& c : cons) {
    CHECK(evaluate(c, mu).is_zero());
    for (const auto& v : span) {
      RatVec shifted = add(mu, v);
      CHECK(evaluate(c, shifted).is_zero());
    }
  }
}

TEST_CASE("affine constraints when the span is the whole hyperplane") {
  RatVec mu = {Rational(1, 2), Rational(1, 4), Rational(1, 4)};
  std::vector<RatVec> span = {{1, -1, 0}, {0, 1, -1}};
  auto cons = affine_constraints(mu, span);
  REQUIRE(cons.size() == 1);
  Ring r{{"p0", "p1", "p2"}};
  CHECK(to_string(cons[0], r) == "p0+p1+p2-1");
}

TEST_CASE("critical system of the cubic edge problem has no minors to add") {
  Budget b = unlimited();
  ToricModel cubic = scaled_cubic(b);
  RatVec mu = {Rational(1, 6), Rational(1, 2), Rational(1, 6), Rational(1, 6)};
  std::vector<RatVec> span = {{0, 0, 1, -1}, {1, 0, 0, -1}};
  RatVec ell = {1, 0, 1, -2};
  CriticalSystem sys = make_critical_system(cubic, ell, mu, span, b);
  CHECK(sys.c == 5);  // exceeds the column count: J = I
  Ideal J = build_critical_ideal(sys, b);
  CHECK(J.gens.size() == sys.model_gens.size() + sys.affine_gens.size());
  CHECK(dimension(J, b) == 0);
  CHECK(degree_zero_dim(J, b) == 3);
}

TEST_CASE("cubic edge problem end to end: degree three") {
  Budget b = unlimited();
  ToricModel cubic = scaled_cubic(b);
  FaceLattice lat = face_lattice(wasserstein_ball(FiniteMetric::discrete(4)));
  RatVec mu = {Rational(1, 6), Rational(1, 2), Rational(1, 6), Rational(1, 6)};
  const Face& edge = find_edge(lat, {0, 0, 1, -1}, {1, 0, 0, -1});
  CHECK(vertex_sum_functional(lat, edge) == RatVec{1, 0, 1, -2});
  DegreeOutcome o = wasserstein_degree(cubic, lat, edge, mu);
  CHECK(o == DegreeOutcome::of_degree(3));
  CHECK_FALSE(o.functional_sensitive);
}

TEST_CASE("degree outcome does not depend on mu") {
  Budget b = unlimited();
  ToricModel cubic = scaled_cubic(b);
  FaceLattice lat = face_lattice(wasserstein_ball(FiniteMetric::discrete(4)));
  const Face& edge = find_edge(lat, {0, 0, 1, -1}, {1, 0, 0, -1});
  DegreeOutcome base = wasserstein_degree(cubic, lat, edge, random_simplex_point(4, 1));
  for (std::uint64_t seed : {2ull, 3ull, 4ull}) {
    DegreeOutcome o = wasserstein_degree(cubic, lat, edge, random_simplex_point(4, seed));
    CHECK(o == base);
  }
}

TEST_CASE("linear model: one critical point per face") {
  // The toric line {p0 = p2} in P^2 with the discrete metric on 3 states.
  Ring r{{"p0", "p1", "p2"}};
  MonomialOrder ord = MonomialOrder::grevlex(3);
  ToricModel line;
  line.label = "line";
  line.A = {{1, 1, 1}, {0, 1, 0}};
  line.scaling = {1, 1, 1};
  line.ring = r;
  line.ideal = Ideal{r, {parse_polynomial("p0-p2", r, ord)}};
  line.dim_projective = 1;
  FiniteMetric disc = FiniteMetric::discrete(3);
  FaceLattice lat = face_lattice(wasserstein_ball(disc));
  RatVec mu = random_simplex_point(3, 5);
  // Vertex faces slice the model line in a single point, the unique critical
  // point; edge faces leave the whole line, where a non-constant linear
  // objective has no critical points at all.
  for (const auto& f : lat.faces(0)) {
    DegreeOutcome o = wasserstein_degree(line, lat, f, mu);
    CHECK(o == DegreeOutcome::of_degree(1));
  }
  for (const auto& f : lat.faces(1)) {
    DegreeOutcome o = wasserstein_degree(line, lat, f, mu);
    CHECK(o == DegreeOutcome::of_degree(0));
  }
}

TEST_CASE("degree table frequencies sum to the f-vector") {
  ToricModel m = hirzebruch(1, 2);
  FiniteMetric l1 = FiniteMetric::l1(5);
  FaceLattice lat = face_lattice(wasserstein_ball(l1));
  RatVec mu = random_simplex_point(5, 11);
  TableOptions opts;
  opts.jobs = 2;
  DegreeTable t = degree_table(m, l1, lat, mu, opts);
  auto fv = lat.f_vector();
  for (std::size_t d = 0; d < fv.size(); ++d) {
    long total = 0;
    for (const auto& [k, c] : t.freq.at(d)) total += c;
    CHECK(total == static_cast<long>(fv[d]));
  }
}

TEST_CASE("degree table respects dimension and codimension filters") {
  ToricModel m = hirzebruch(1, 2);
  FiniteMetric l1 = FiniteMetric::l1(5);
  FaceLattice lat = face_lattice(wasserstein_ball(l1));
  RatVec mu = random_simplex_point(5, 11);
  TableOptions opts;
  opts.dims = {1};
  DegreeTable t1 = degree_table(m, l1, lat, mu, opts);
  CHECK(t1.freq.size() == 1);
  CHECK(t1.freq.count(1) == 1);
  opts.by_codim = true;  // codim 1 = dim 3
  DegreeTable t2 = degree_table(m, l1, lat, mu, opts);
  CHECK(t2.freq.size() == 1);
  CHECK(t2.freq.count(3) == 1);
  CHECK(t2.freq.at(3).at("3") == 16);
}

TEST_CASE("outcomes respect the polar degree bound") {
  ToricModel m = hirzebruch(1, 2);
  FiniteMetric l1 = FiniteMetric::l1(5);
  FaceLattice lat = face_lattice(wasserstein_ball(l1));
  RatVec mu = random_simplex_point(5, 17);
  MultiDegree md = hirzebruch_polar_degrees(1, 2);
  TableOptions opts;
  opts.jobs = 2;
  DegreeTable t = degree_table(m, l1, lat, mu, opts);
  for (const auto& fo : t.outcomes) {
    if (fo.outcome.kind != DegreeOutcome::Kind::Degree) continue;
    int codim = static_cast<int>(lat.dim() - fo.dim);
    auto bound = polar_bound_for_face(md, m.dim_projective, codim);
    if (bound)
      CHECK(fo.outcome.degree <= *bound);
  }
}

TEST_CASE("faces in one metric-symmetry orbit share their outcome") {
  Budget b = unlimited();
  ToricModel m = scaled_cubic(b);
  FiniteMetric disc = FiniteMetric::discrete(4);
  FaceLattice lat = face_lattice(wasserstein_ball(disc));
  RatVec mu = random_simplex_point(4, 23);
  auto group = disc.symmetry_group();
  REQUIRE(group.size() == 24);
  // Map each face to its orbit representative by permuting vertex coordinates.
  const auto& verts = lat.polytope().vertices;
  auto vertex_index = [&](const RatVec& v) {
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (verts[i] == v) return i;
    throw std::logic_error("vertex not found");
  };
  const auto& edges = lat.faces(1);
  std::vector<DegreeOutcome> outcome(edges.size());
  std::vector<bool> have(edges.size(), false);
  auto edge_lookup = [&](std::vector<std::size_t> key) -> std::size_t {
    std::sort(key.begin(), key.end());
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i].vertex_indices == key) return i;
    throw std::logic_error("edge not found");
  };
  // Outcome of edge 0, transported around its orbit.
  std::size_t base = 0;
  WdegOptions wopts;
  DegreeOutcome base_outcome = wasserstein_degree(m, lat, edges[base], mu, wopts);
  int checked = 0;
  for (const auto& perm : group) {
    std::vector<std::size_t> image;
    for (auto vi : edges[base].vertex_indices) {
      RatVec v = verts[vi];
      RatVec pv(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) pv[perm[i]] = v[i];
      image.push_back(vertex_index(pv));
    }
    std::size_t ei = edge_lookup(image);
    if (!have[ei]) {
      outcome[ei] = wasserstein_degree(m, lat, edges[ei], mu, wopts);
      have[ei] = true;
    }
    CHECK(outcome[ei] == base_outcome);
    if (++checked >= 8) break;  // orbit sampling is enough
  }
}

TEST_CASE("singular-locus saturation keeps smooth critical points") {
  Budget b = unlimited();
  ToricModel cubic = scaled_cubic(b);
  FaceLattice lat = face_lattice(wasserstein_ball(FiniteMetric::discrete(4)));
  const Face& edge = find_edge(lat, {0, 0, 1, -1}, {1, 0, 0, -1});
  RatVec mu = {Rational(1, 6), Rational(1, 2), Rational(1, 6), Rational(1, 6)};
  WdegOptions opts;
  opts.saturate_singular = true;
  // The three critical points are smooth on the curve, so nothing is dropped.
  CHECK(wasserstein_degree(cubic, lat, edge, mu, opts) == DegreeOutcome::of_degree(3));
}

TEST_CASE("timeouts are reported per face, not thrown") {
  Budget b = unlimited();
  ToricModel m = no3way(2, 2, 2, b);
  FiniteMetric ham = FiniteMetric::hamming({2, 2, 2});
  FaceLattice lat = face_lattice(wasserstein_ball(ham));
  RatVec mu = random_simplex_point(8, 3);
  WdegOptions opts;
  opts.budget_steps = 5;
  DegreeOutcome o = wasserstein_degree(m, lat, lat.faces(3).at(0), mu, opts);
  CHECK(o.kind == DegreeOutcome::Kind::TimedOut);
  CHECK(o.key() == "timeout");
}

TEST_CASE("solve_zero_dim recovers square roots") {
  Ring r{{"x", "y"}};
  MonomialOrder ord = MonomialOrder::grevlex(2);
  Ideal i{r, {parse_polynomial("x^2-2", r, ord), parse_polynomial("y-x", r, ord)}};
  Budget b = unlimited();
  ZeroDimSolution sol = solve_zero_dim(i, 1e-12, b);
  REQUIRE(sol.points.size() == 2);
  CHECK(sol.real[0]);
  CHECK(sol.real[1]);
  double s2 = std::sqrt(2.0);
  for (const auto& pt : sol.points) {
    CHECK(std::abs(std::abs(pt[1].real()) - s2) < 1e-9);
    CHECK(std::abs(pt[0].real() - pt[1].real()) < 1e-9);
  }
}

TEST_CASE("solve_zero_dim on the cubic slice system") {
  Budget b = unlimited();
  Ring r{{"p0", "p1", "p2", "p3"}};
  MonomialOrder ord = MonomialOrder::grevlex(4);
  Ideal i{r,
          {parse_polynomial("3*p0*p2-p1^2", r, ord), parse_polynomial("3*p1*p3-p2^2", r, ord),
           parse_polynomial("9*p0*p3-p1*p2", r, ord),
           parse_polynomial("p0+p1+p2+p3-1", r, ord),
           parse_polynomial("p0+p2+p3-1/2", r, ord)}};
  ZeroDimSolution sol = solve_zero_dim(i, 1e-10, b);
  CHECK(sol.points.size() == 3);  // counted with multiplicity, squarefree here
  int real_count = 0;
  for (bool re : sol.real) real_count += re ? 1 : 0;
  CHECK(real_count >= 1);
  // Each solution satisfies the univariate factor 216*t^3-540*t^2+18*t-1.
  for (const auto& pt : sol.points) {
    std::complex<double> t = pt[3];
    std::complex<double> val = 216.0 * t * t * t - 540.0 * t * t + 18.0 * t - 1.0;
    CHECK(std::abs(val) < 1e-7);
  }
}

TEST_CASE("solve_zero_dim rejects positive-dimensional input") {
  Ring r{{"x", "y"}};
  MonomialOrder ord = MonomialOrder::grevlex(2);
  Ideal i{r, {parse_polynomial("x*y", r, ord)}};
  Budget b = unlimited();
  CHECK_THROWS_AS(solve_zero_dim(i, 1e-12, b), NotZeroDimensional);
}

TEST_CASE("solve_zero_dim flags bases outside shape position") {
  Ring r{{"x", "y"}};
  MonomialOrder ord = MonomialOrder::grevlex(2);
  Ideal i{r, {parse_polynomial("x^2", r, ord), parse_polynomial("y^2", r, ord)}};
  Budget b = unlimited();
  CHECK_THROWS_AS(solve_zero_dim(i, 1e-12, b), NotShapePosition);
}

TEST_CASE("distance candidate records per-face failures and keeps going") {
  Budget b = unlimited();
  ToricModel cubic = scaled_cubic(b);
  FiniteMetric disc = FiniteMetric::discrete(4);
  FaceLattice lat = face_lattice(wasserstein_ball(disc));
  RatVec mu = {Rational(1, 4), Rational(1, 5), Rational(1, 6), Rational(23, 60)};
  std::vector<std::size_t> faces = {lat.flat_index(1, 0), lat.flat_index(1, 1)};
  WdegOptions opts;
  opts.budget_steps = 3;  // every face runs out of budget
  DistanceCandidate dc = distance_candidate(cubic, disc, lat, mu, faces, opts);
  CHECK_FALSE(dc.found);
  CHECK(dc.face_errors.size() == 2);
}

TEST_CASE("single rational point solves exactly") {
  Ring r{{"x"}};
  MonomialOrder ord = MonomialOrder::grevlex(1);
  Ideal i{r, {parse_polynomial("2*x-1", r, ord)}};
  Budget b = unlimited();
  ZeroDimSolution sol = solve_zero_dim(i, 1e-12, b);
  REQUIRE(sol.points.size() == 1);
  CHECK(sol.exact);
  CHECK(std::abs(sol.points[0][0].real() - 0.5) < 1e-15);
}

TEST_CASE("wasserstein lp basics") {
  FiniteMetric d2 = FiniteMetric::discrete(2);
  RatVec mu = {1, 0}, nu = {0, 1};
  CHECK(wasserstein_lp(mu, nu, d2) == Rational(1));
  CHECK(wasserstein_lp(mu, mu, d2) == Rational(0));
  CHECK_THROWS(wasserstein_lp({1, 1}, {0, 1}, d2));
}

TEST_CASE("discrete metric lp equals half the l1 distance") {
  FiniteMetric d = FiniteMetric::discrete(4);
  SplitMix64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    RatVec mu = random_simplex_point(4, rng.next());
    RatVec nu = random_simplex_point(4, rng.next());
    Rational tv;
    for (std::size_t i = 0; i < 4; ++i) tv += (mu[i] - nu[i]).abs();
    CHECK(wasserstein_lp(mu, nu, d) == tv / Rational(2));
  }
}

TEST_CASE("lp equals the polyhedral optimum over the lipschitz polytope") {
  for (const FiniteMetric& d : {FiniteMetric::discrete(3), FiniteMetric::l1(4)}) {
    VPolytope pd = hrep_to_vrep(lipschitz_polytope(d));
    SplitMix64 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
      RatVec mu = random_simplex_point(d.size(), rng.next());
      RatVec nu = random_simplex_point(d.size(), rng.next());
      Rational best(0);
      for (const auto& v : pd.vertices) {
        Rational val = dot(sub(mu, nu), v);
        if (val > best) best = val;
      }
      CHECK(wasserstein_lp(mu, nu, d) == best);
    }
  }
}

TEST_CASE("distance candidate for the binomial cubic") {
  Budget b = unlimited();
  ToricModel cubic = scaled_cubic(b);
  FiniteMetric disc = FiniteMetric::discrete(4);
  FaceLattice lat = face_lattice(wasserstein_ball(disc));
  RatVec mu = {Rational(1, 4), Rational(1, 5), Rational(1, 6), Rational(23, 60)};
  std::vector<std::size_t> edges;
  for (std::size_t i = 0; i < lat.faces(1).size(); ++i) edges.push_back(lat.flat_index(1, i));
  DistanceCandidate dc = distance_candidate(cubic, disc, lat, mu, edges);
  REQUIRE(dc.found);
  CHECK(std::abs(dc.lambda - 0.268) < 0.005);
  std::vector<double> expect = {0.02, 0.16, 0.44, 0.38};
  REQUIRE(dc.nu.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(dc.nu[i] - expect[i]) < 0.01);
}

TEST_CASE("distance candidate is zero on the model") {
  Budget b = unlimited();
  ToricModel cubic = scaled_cubic(b);
  FiniteMetric disc = FiniteMetric::discrete(4);
  FaceLattice lat = face_lattice(wasserstein_ball(disc));
  // Parametrization point with theta = 1/2: (1,3,3,1)/8.
  RatVec mu = {Rational(1, 8), Rational(3, 8), Rational(3, 8), Rational(1, 8)};
  std::vector<std::size_t> faces;
  for (std::size_t i = 0; i < lat.faces(0).size(); ++i) faces.push_back(lat.flat_index(0, i));
  DistanceCandidate dc = distance_candidate(cubic, disc, lat, mu, faces);
  REQUIRE(dc.found);
  CHECK(std::abs(dc.lambda) < 1e-9);
}

TEST_CASE("random simplex points are simplex points") {
  for (std::uint64_t seed : {1ull, 9ull, 123ull}) {
    RatVec mu = random_simplex_point(6, seed);
    Rational total;
    for (const auto& x : mu) {
      CHECK(x.sign() > 0);
      total += x;
    }
    CHECK(total == Rational(1));
  }
}
