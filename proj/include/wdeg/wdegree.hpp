#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>

#include "wdeg/polar.hpp"
#include "wdeg/polytope.hpp"
#include "wdeg/toric.hpp"

namespace wdeg {

struct NotShapePosition : std::runtime_error {
  NotShapePosition() : std::runtime_error("lex basis is not in shape position") {}
};

// Random rational point of the open simplex, entries r_i / sum with
// r_i uniform in {1..96}.
RatVec random_simplex_point(std::size_t n, std::uint64_t seed);

// Linear equations cutting mu + span(L): the sum-to-one equation plus
// eta . p = eta . mu for a reduced basis of the orthogonal complement of L
// (the basis vector absorbed by the all-ones direction is dropped).
std::vector<Polynomial> affine_constraints(const RatVec& mu, const std::vector<RatVec>& span);

/// One face-constrained optimization instance: the model equations, the
/// affine equations of mu + L_F, and the face functional.
struct CriticalSystem {
  Ring ring;
  std::vector<Polynomial> model_gens;
  std::vector<Polynomial> affine_gens;
  Polynomial objective;
  int c = 0;  // n - dim(model + affine) + 1
};

CriticalSystem make_critical_system(const ToricModel& model, const RatVec& functional,
                                    const RatVec& mu, const std::vector<RatVec>& span,
                                    Budget& budget);

// J = <generators> + <all c-minors of the Jacobian stacked under the
// gradient of the objective>; identically zero minors are dropped.
Ideal build_critical_ideal(const CriticalSystem& sys, Budget& budget);

struct DegreeOutcome {
  enum class Kind { Degree, NotZeroDimensional, TimedOut };
  Kind kind = Kind::Degree;
  int degree = 0;
  bool functional_sensitive = false;  // needed a perturbed functional

  static DegreeOutcome of_degree(int d, bool sensitive = false) {
    return {Kind::Degree, d, sensitive};
  }
  std::string key() const;  // "k", "-", or "timeout"
  friend bool operator==(const DegreeOutcome& a, const DegreeOutcome& b) {
    return a.kind == b.kind && (a.kind != Kind::Degree || a.degree == b.degree);
  }
};

struct WdegOptions {
  std::uint64_t budget_steps = 0;  // 0 = uncapped
  std::chrono::milliseconds budget_wall{0};
  std::uint64_t functional_seed = 7;
  bool saturate_singular = false;  // opt-in: discard critical points at singularities
};

// Primary objective for a face: the sum of its vertices, normalized to a
// primitive integer vector.
RatVec vertex_sum_functional(const FaceLattice& lattice, const Face& face);

// Algorithm-1 outcome for one face. The objective is the vertex sum; a
// positive-dimensional J falls back to the facet-normal functional and then
// to a seeded re-draw inside the normal cone, marking the outcome
// functional-sensitive; only when all three fail is "-" reported.
DegreeOutcome wasserstein_degree(const ToricModel& model, const FaceLattice& lattice,
                                 const Face& face, const RatVec& mu,
                                 const WdegOptions& opts = {});

struct FaceOutcome {
  std::size_t flat_index = 0;
  std::size_t dim = 0;
  DegreeOutcome outcome;
  double seconds = 0;
};

struct DegreeTable {
  std::string model_label;
  std::string metric_label;
  std::vector<std::size_t> f_vector;
  std::vector<FaceOutcome> outcomes;
  // dimension -> outcome key -> face count
  std::map<std::size_t, std::map<std::string, long>> freq;
};

struct TableOptions {
  std::vector<int> dims;    // empty = every dimension
  bool by_codim = false;    // interpret dims as codimensions
  int jobs = 1;
  WdegOptions face_opts;
};

using FaceCallback = std::function<void(const FaceOutcome&)>;

// Frequency table over the selected faces; per-face budgets, parallel
// workers, optional resume data keyed by flat face index, and a progress
// callback invoked under a lock.
DegreeTable degree_table(const ToricModel& model, const FiniteMetric& metric,
                         const FaceLattice& lattice, const RatVec& mu,
                         const TableOptions& opts,
                         const std::map<std::size_t, DegreeOutcome>* resume = nullptr,
                         const FaceCallback& cb = {});

struct ZeroDimSolution {
  std::vector<std::vector<std::complex<double>>> points;
  std::vector<bool> real;
  bool exact = false;  // all coordinates solved by rational elimination
};

// Solve a zero-dimensional system from its lex basis: requires shape position
// (triangular with one univariate polynomial), roots via the companion
// matrix, then back-substitution.
ZeroDimSolution solve_zero_dim(const Ideal& ideal, double tolerance, Budget& budget);

struct DistanceCandidate {
  bool found = false;
  double lambda = 0;
  std::vector<double> nu;
  std::size_t face_flat_index = 0;
  std::vector<std::string> face_errors;
};

// Per-face critical points, filtered to (numerically) real points of the
// simplex, scored by the exact ball gauge; an upper bound for the distance,
// not a certificate.
DistanceCandidate distance_candidate(const ToricModel& model, const FiniteMetric& metric,
                                     const FaceLattice& lattice, const RatVec& mu,
                                     const std::vector<std::size_t>& face_indices,
                                     const WdegOptions& opts = {});

// Exact optimum of maximize (mu - nu) . x over the Lipschitz polytope,
// computed as the ball gauge of nu - mu over the facets of the ball.
Rational wasserstein_lp(const RatVec& mu, const RatVec& nu, const FiniteMetric& metric);
Rational ball_gauge(const RatVec& w, const HPolytope& ball_hrep);

}  // namespace wdeg
