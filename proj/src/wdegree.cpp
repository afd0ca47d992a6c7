#include "wdeg/wdegree.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "wdeg/rng.hpp"

namespace wdeg {

RatVec random_simplex_point(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<long> r(n);
  long total = 0;
  for (auto& x : r) {
    x = rng.positive_int(96);
    total += x;
  }
  RatVec mu(n);
  for (std::size_t i = 0; i < n; ++i) mu[i] = Rational(r[i], total);
  return mu;
}

std::vector<Polynomial> affine_constraints(const RatVec& mu, const std::vector<RatVec>& span) {
  std::size_t n = mu.size();
  MonomialOrder ord = MonomialOrder::grevlex(n);
  auto linear_eq = [&](const RatVec& eta, const Rational& rhs) {
    std::vector<Term> ts;
    for (std::size_t i = 0; i < n; ++i) {
      if (eta[i].is_zero()) continue;
      Monomial m = Monomial::one(n);
      m.e[i] = 1;
      ts.push_back({std::move(m), eta[i]});
    }
    if (!rhs.is_zero()) ts.push_back({Monomial::one(n), -rhs});
    return Polynomial::from_terms(std::move(ts), ord);
  };

  std::vector<Polynomial> out;
  out.push_back(linear_eq(RatVec(n, Rational(1)), Rational(1)));

  // Orthogonal complement of the span; the all-ones vector always lies in it
  // because faces of the ball sit inside the sum-zero hyperplane.
  std::vector<RatVec> complement = kernel_basis(RatMatrix::from_rows(span));
  if (complement.empty()) return out;
  RatMatrix wt(mu.size(), complement.size());
  for (std::size_t j = 0; j < complement.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) wt.at(i, j) = complement[j][i];
  RatVec coeff;
  if (!solve_affine(wt, RatVec(n, Rational(1)), coeff))
    throw std::logic_error("affine_constraints: all-ones not in complement");
  std::size_t drop = complement.size();
  for (std::size_t j = 0; j < complement.size(); ++j)
    if (!coeff[j].is_zero()) {
      drop = j;
      break;
    }
  for (std::size_t j = 0; j < complement.size(); ++j) {
    if (j == drop) continue;
    out.push_back(linear_eq(complement[j], dot(complement[j], mu)));
  }
  return out;
}

namespace {

Polynomial functional_poly(const RatVec& f, std::size_t n) {
  std::vector<Term> ts;
  for (std::size_t i = 0; i < n; ++i) {
    if (f[i].is_zero()) continue;
    Monomial m = Monomial::one(n);
    m.e[i] = 1;
    ts.push_back({std::move(m), f[i]});
  }
  return Polynomial::from_terms(std::move(ts), MonomialOrder::grevlex(n));
}

// Determinant expansion with memoized submatrices (shared across minors).
class PolyDet {
 public:
  PolyDet(const std::vector<std::vector<Polynomial>>& m, const MonomialOrder& ord,
          Budget& budget)
      : m_(m), ord_(ord), budget_(budget) {}

  Polynomial minor(std::uint64_t row_mask, std::uint64_t col_mask) {
    auto key = std::make_pair(row_mask, col_mask);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    budget_.tick();
    Polynomial result;
    int r = __builtin_ctzll(row_mask);
    std::uint64_t rest = row_mask & (row_mask - 1);
    if (rest == 0) {
      result = m_[r][__builtin_ctzll(col_mask)];
    } else {
      int sign = 1;
      for (std::uint64_t cm = col_mask; cm; cm &= cm - 1) {
        int c = __builtin_ctzll(cm);
        if (!m_[r][c].is_zero()) {
          Polynomial contrib = mul(m_[r][c], minor(rest, col_mask & ~(1ull << c)), ord_);
          result = sign > 0 ? add(result, contrib, ord_) : sub(result, contrib, ord_);
        }
        sign = -sign;
      }
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  const std::vector<std::vector<Polynomial>>& m_;
  const MonomialOrder& ord_;
  Budget& budget_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Polynomial> memo_;
};

void size_subsets(int n, int k, std::uint64_t cur, int start, std::vector<std::uint64_t>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n - k; ++i)
    size_subsets(n, k - 1, cur | (1ull << i), i + 1, out);
}

std::vector<std::uint64_t> subsets(int n, int k) {
  std::vector<std::uint64_t> out;
  if (k >= 0 && k <= n) size_subsets(n, k, 0, 0, out);
  return out;
}

Budget make_budget(const WdegOptions& o) {
  if (o.budget_steps == 0 && o.budget_wall.count() == 0) return Budget::unlimited();
  return Budget(o.budget_steps, o.budget_wall.count() ? o.budget_wall
                                                      : std::chrono::milliseconds(1u << 30));
}

// Eliminate the affine-linear generators, then report (dimension, degree) of
// what is left. Dimension and degree are invariant under that substitution.
struct ReducedAnalysis {
  int dim = 0;       // -1 for the improper ideal
  int degree = 0;    // meaningful when dim <= 0
  GroebnerBasis gb;  // reduced basis of the substituted system
  LinearReduction red;
};

ReducedAnalysis analyze_with_linear(const Ring& ring, const std::vector<Polynomial>& gens,
                                    const std::vector<Polynomial>& linear, Budget& budget) {
  ReducedAnalysis out;
  out.red = reduce_by_linear(ring, linear);
  if (!out.red.consistent) {
    out.dim = -1;
    out.degree = 0;
    return out;
  }
  MonomialOrder ord = MonomialOrder::grevlex(out.red.reduced_ring.arity());
  Ideal sub{out.red.reduced_ring, {}};
  for (const auto& g : gens) {
    Polynomial q = apply_linear_reduction(out.red, g, ord);
    if (!q.is_zero()) sub.gens.push_back(std::move(q));
  }
  out.gb = buchberger(sub, ord, budget);
  out.dim = dimension_from_gb(out.gb);
  if (out.dim == 0 || out.dim == -1)
    out.degree = contains_one(out.gb) ? 0 : degree_zero_dim_from_gb(out.gb);
  return out;
}

}  // namespace

CriticalSystem make_critical_system(const ToricModel& model, const RatVec& functional,
                                    const RatVec& mu, const std::vector<RatVec>& span,
                                    Budget& budget) {
  CriticalSystem sys;
  sys.ring = model.ring;
  sys.model_gens = model.ideal.gens;
  sys.affine_gens = affine_constraints(mu, span);
  sys.objective = functional_poly(functional, model.ring.arity());
  std::vector<Polynomial> all = sys.model_gens;
  all.insert(all.end(), sys.affine_gens.begin(), sys.affine_gens.end());
  ReducedAnalysis a = analyze_with_linear(sys.ring, sys.model_gens, sys.affine_gens, budget);
  sys.c = static_cast<int>(sys.ring.arity()) - a.dim + 1;
  return sys;
}

Ideal build_critical_ideal(const CriticalSystem& sys, Budget& budget) {
  std::size_t n = sys.ring.arity();
  MonomialOrder ord = MonomialOrder::grevlex(n);
  std::vector<Polynomial> gens = sys.model_gens;
  gens.insert(gens.end(), sys.affine_gens.begin(), sys.affine_gens.end());

  Ideal J{sys.ring, gens};
  int rows = static_cast<int>(gens.size()) + 1;
  int c = sys.c;
  if (c >= 1 && c <= rows && c <= static_cast<int>(n)) {
    std::vector<std::vector<Polynomial>> jac(rows, std::vector<Polynomial>(n));
    for (std::size_t j = 0; j < n; ++j) jac[0][j] = derivative(sys.objective, j, ord);
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) jac[i + 1][j] = derivative(gens[i], j, ord);
    PolyDet det(jac, ord, budget);
    for (auto rm : subsets(rows, c))
      for (auto cm : subsets(static_cast<int>(n), c)) {
        Polynomial d = det.minor(rm, cm);
        if (!d.is_zero()) J.gens.push_back(std::move(d));
      }
  }
  return J;
}

std::string DegreeOutcome::key() const {
  switch (kind) {
    case Kind::Degree:
      return std::to_string(degree);
    case Kind::NotZeroDimensional:
      return "-";
    case Kind::TimedOut:
      return "timeout";
  }
  return "?";
}

namespace {

DegreeOutcome degree_once(const ToricModel& model, const RatVec& functional,
                          const RatVec& mu, const std::vector<RatVec>& span,
                          const WdegOptions& opts, Budget& budget) {
  CriticalSystem sys = make_critical_system(model, functional, mu, span, budget);
  Ideal J = build_critical_ideal(sys, budget);
  if (opts.saturate_singular && sys.c >= 2) {
    // Opt-in refinement: drop critical points sitting on the singular locus
    // of the constraint variety, via the (c-1)-minors of the plain Jacobian.
    std::size_t n = sys.ring.arity();
    MonomialOrder ord = MonomialOrder::grevlex(n);
    std::vector<Polynomial> gens = sys.model_gens;
    gens.insert(gens.end(), sys.affine_gens.begin(), sys.affine_gens.end());
    std::vector<std::vector<Polynomial>> jac(gens.size(), std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) jac[i][j] = derivative(gens[i], j, ord);
    PolyDet det(jac, ord, budget);
    SplitMix64 rng(opts.functional_seed + 101);
    Polynomial combo;
    for (auto rm : subsets(static_cast<int>(gens.size()), sys.c - 1))
      for (auto cm : subsets(static_cast<int>(n), sys.c - 1)) {
        Polynomial d = det.minor(rm, cm);
        if (!d.is_zero())
          combo = add(combo, mul_scalar(d, Rational(rng.nonzero_small_int())), ord);
      }
    if (!combo.is_zero()) J = saturate(J, combo, budget);
  }
  ReducedAnalysis a = analyze_with_linear(sys.ring, J.gens, sys.affine_gens, budget);
  if (a.dim > 0) return {DegreeOutcome::Kind::NotZeroDimensional, 0, false};
  return DegreeOutcome::of_degree(a.degree);
}

}  // namespace

RatVec vertex_sum_functional(const FaceLattice& lattice, const Face& face) {
  RatVec sum(lattice.polytope().ambient, Rational(0));
  for (auto vi : face.vertex_indices) sum = add(sum, lattice.polytope().vertices[vi]);
  return primitive_integer(sum);
}

DegreeOutcome wasserstein_degree(const ToricModel& model, const FaceLattice& lattice,
                                 const Face& face, const RatVec& mu,
                                 const WdegOptions& opts) {
  if (model.ring.arity() != mu.size() || mu.size() != lattice.polytope().ambient)
    throw std::invalid_argument("wasserstein_degree: dimension mismatch");
  Budget budget = make_budget(opts);
  try {
    DegreeOutcome first =
        degree_once(model, vertex_sum_functional(lattice, face), mu, face.span_basis, opts,
                    budget);
    if (first.kind != DegreeOutcome::Kind::NotZeroDimensional) return first;
    // Fall back to the facet-normal functional, then to a seeded re-draw
    // inside the normal cone, before reporting "-".
    for (const RatVec& ell :
         {face.functional, lattice.perturbed_functional(face, opts.functional_seed)}) {
      DegreeOutcome next = degree_once(model, ell, mu, face.span_basis, opts, budget);
      if (next.kind == DegreeOutcome::Kind::Degree) {
        next.functional_sensitive = true;
        return next;
      }
    }
    return first;
  } catch (const TimeoutError&) {
    return {DegreeOutcome::Kind::TimedOut, 0, false};
  }
}

DegreeTable degree_table(const ToricModel& model, const FiniteMetric& metric,
                         const FaceLattice& lattice, const RatVec& mu,
                         const TableOptions& opts,
                         const std::map<std::size_t, DegreeOutcome>* resume,
                         const FaceCallback& cb) {
  DegreeTable table;
  table.model_label = model.label;
  table.metric_label = metric.label();
  table.f_vector = lattice.f_vector();

  std::size_t ball_dim = lattice.dim();
  auto selected = [&](std::size_t d) {
    if (opts.dims.empty()) return true;
    int key = opts.by_codim ? static_cast<int>(ball_dim - d) : static_cast<int>(d);
    return std::find(opts.dims.begin(), opts.dims.end(), key) != opts.dims.end();
  };
  std::vector<std::size_t> work;
  std::size_t flat = 0;
  for (std::size_t d = 0; d < ball_dim; ++d)
    for (std::size_t i = 0; i < lattice.faces(d).size(); ++i, ++flat)
      if (selected(d)) work.push_back(flat);

  std::mutex out_mutex;
  std::atomic<std::size_t> next{0};
  std::vector<FaceOutcome> results(work.size());
  auto run = [&]() {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= work.size()) break;
      std::size_t fi = work[k];
      const Face& face = lattice.face_at(fi);
      FaceOutcome fo;
      fo.flat_index = fi;
      fo.dim = face.dim;
      if (resume) {
        auto it = resume->find(fi);
        if (it != resume->end()) {
          fo.outcome = it->second;
          results[k] = fo;
          if (cb) {
            std::lock_guard<std::mutex> lock(out_mutex);
            cb(fo);
          }
          continue;
        }
      }
      auto t0 = std::chrono::steady_clock::now();
      fo.outcome = wasserstein_degree(model, lattice, face, mu, opts.face_opts);
      fo.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      results[k] = fo;
      if (cb) {
        std::lock_guard<std::mutex> lock(out_mutex);
        cb(fo);
      }
    }
  };
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(run);
    for (auto& th : pool) th.join();
  }
  for (auto& fo : results) {
    table.freq[fo.dim][fo.outcome.key()] += 1;
    table.outcomes.push_back(std::move(fo));
  }
  std::sort(table.outcomes.begin(), table.outcomes.end(),
            [](const FaceOutcome& a, const FaceOutcome& b) {
              return a.flat_index < b.flat_index;
            });
  return table;
}

ZeroDimSolution solve_zero_dim(const Ideal& ideal, double tolerance, Budget& budget) {
  std::size_t n = ideal.ring.arity();
  MonomialOrder lex = MonomialOrder::lex(n);
  GroebnerBasis gb = buchberger(ideal, lex, budget);
  if (contains_one(gb)) return {};
  int dim = dimension_from_gb(gb);
  if (dim != 0) throw NotZeroDimensional();

  // Shape position: univariate in the last variable plus one linear rule
  // x_i - g_i(x_last) for every other variable.
  const Polynomial* univ = nullptr;
  std::vector<const Polynomial*> rules(n, nullptr);
  for (const auto& g : gb.basis) {
    bool only_last = true;
    for (std::size_t v = 0; v + 1 < n; ++v)
      if (g.uses_var(v)) only_last = false;
    if (only_last) {
      univ = &g;
      continue;
    }
    const Monomial& lt = g.lt().m;
    std::size_t head = 0;
    while (head + 1 < n && lt.e[head] == 0) ++head;
    if (lt.e[head] != 1 || lt.deg() != 1) throw NotShapePosition();
    for (const auto& t : g.terms()) {
      if (t.m == lt) continue;
      for (std::size_t v = 0; v + 1 < n; ++v)
        if (t.m.e[v] > 0) throw NotShapePosition();
    }
    if (rules[head]) throw NotShapePosition();
    rules[head] = &g;
  }
  if (!univ) throw NotShapePosition();
  for (std::size_t v = 0; v + 1 < n; ++v)
    if (!rules[v]) throw NotShapePosition();

  // Roots of the univariate polynomial via the companion matrix.
  std::vector<double> coeffs;  // ascending in x_last
  int deg = univ->lt().m.e[n - 1];
  coeffs.assign(deg + 1, 0.0);
  for (const auto& t : univ->terms()) coeffs[t.m.e[n - 1]] = t.c.to_double();
  ZeroDimSolution sol;
  sol.exact = deg <= 1;
  std::vector<std::complex<double>> roots;
  if (deg == 0) return sol;
  if (deg == 1) {
    roots.push_back({-coeffs[0] / coeffs[1], 0.0});
  } else {
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -coeffs[i] / coeffs[deg];
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
    for (int i = 0; i < deg; ++i)
      roots.push_back({es.eigenvalues()[i].real(), es.eigenvalues()[i].imag()});
    // One Newton pass tightens the eigenvalue roots.
    auto eval = [&](std::complex<double> z, bool deriv) {
      std::complex<double> acc = 0;
      if (!deriv) {
        for (int i = deg; i >= 0; --i) acc = acc * z + coeffs[i];
      } else {
        for (int i = deg; i >= 1; --i) acc = acc * z + double(i) * coeffs[i];
      }
      return acc;
    };
    for (auto& z : roots)
      for (int it = 0; it < 3; ++it) {
        auto d = eval(z, true);
        if (std::abs(d) < 1e-14) break;
        z -= eval(z, false) / d;
      }
  }
  for (const auto& root : roots) {
    std::vector<std::complex<double>> pt(n);
    pt[n - 1] = root;
    for (std::size_t v = 0; v + 1 < n; ++v) {
      // x_v = -(tail evaluated at the root) / leading coefficient.
      std::complex<double> tail = 0;
      double lead = 1.0;
      for (const auto& t : rules[v]->terms()) {
        if (t.m.e[v] == 1) {
          lead = t.c.to_double();
          continue;
        }
        std::complex<double> term = t.c.to_double();
        for (int k = 0; k < t.m.e[n - 1]; ++k) term *= root;
        tail += term;
      }
      pt[v] = -tail / lead;
    }
    bool is_real = true;
    for (const auto& z : pt)
      if (std::abs(z.imag()) > tolerance) is_real = false;
    sol.points.push_back(std::move(pt));
    sol.real.push_back(is_real);
  }
  return sol;
}

Rational ball_gauge(const RatVec& w, const HPolytope& ball_hrep) {
  Rational best(0);
  for (const auto& [a, b] : ball_hrep.inequalities) {
    Rational v = dot(a, w) / b;
    if (v > best) best = v;
  }
  return best;
}

Rational wasserstein_lp(const RatVec& mu, const RatVec& nu, const FiniteMetric& metric) {
  Rational smu, snu;
  for (const auto& x : mu) smu += x;
  for (const auto& x : nu) snu += x;
  if (!(smu == Rational(1)) || !(snu == Rational(1)))
    throw std::invalid_argument("wasserstein_lp: points must sum to 1");
  HPolytope h = vrep_to_hrep(wasserstein_ball(metric));
  return ball_gauge(sub(nu, mu), h);
}

DistanceCandidate distance_candidate(const ToricModel& model, const FiniteMetric& metric,
                                     const FaceLattice& lattice, const RatVec& mu,
                                     const std::vector<std::size_t>& face_indices,
                                     const WdegOptions& opts) {
  if (metric.size() != model.ring.arity())
    throw std::invalid_argument("distance_candidate: metric and model sizes disagree");
  DistanceCandidate best;
  const double tol = 1e-8;
  HPolytope ball_h = lattice.hrep();
  std::vector<double> mu_d(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) mu_d[i] = mu[i].to_double();

  for (auto fi : face_indices) {
    try {
      Budget budget = make_budget(opts);
      const Face& face = lattice.face_at(fi);
      CriticalSystem sys =
          make_critical_system(model, face.functional, mu, face.span_basis, budget);
      Ideal J = build_critical_ideal(sys, budget);
      LinearReduction red = reduce_by_linear(sys.ring, sys.affine_gens);
      if (!red.consistent) continue;
      MonomialOrder ord = MonomialOrder::grevlex(red.reduced_ring.arity());
      Ideal sub{red.reduced_ring, {}};
      for (const auto& g : J.gens) {
        Polynomial q = apply_linear_reduction(red, g, ord);
        if (!q.is_zero()) sub.gens.push_back(std::move(q));
      }
      ZeroDimSolution sol = solve_zero_dim(sub, tol, budget);
      for (std::size_t s = 0; s < sol.points.size(); ++s) {
        if (!sol.real[s]) continue;
        // Lift the reduced point back to full coordinates.
        std::vector<double> free_vals(red.reduced_ring.arity());
        for (std::size_t k = 0; k < free_vals.size(); ++k)
          free_vals[k] = sol.points[s][k].real();
        std::vector<double> nu_d(model.ring.arity());
        bool in_simplex = true;
        for (std::size_t v = 0; v < nu_d.size(); ++v) {
          double acc = 0;
          for (const auto& t : red.substitution[v].terms()) {
            double term = t.c.to_double();
            for (std::size_t k = 0; k < free_vals.size(); ++k)
              for (int e = 0; e < t.m.e[k]; ++e) term *= free_vals[k];
            acc += term;
          }
          nu_d[v] = acc;
          if (acc < -1e-7) in_simplex = false;
        }
        if (!in_simplex) continue;
        double lam = 0;
        for (const auto& [a, b] : ball_h.inequalities) {
          double num = 0;
          for (std::size_t v = 0; v < nu_d.size(); ++v)
            num += a[v].to_double() * (nu_d[v] - mu_d[v]);
          lam = std::max(lam, num / b.to_double());
        }
        if (!best.found || lam < best.lambda) {
          best.found = true;
          best.lambda = lam;
          best.nu = nu_d;
          best.face_flat_index = fi;
        }
      }
    } catch (const std::exception& e) {
      best.face_errors.push_back("face " + std::to_string(fi) + ": " + e.what());
    }
  }
  return best;
}

}  // namespace wdeg
