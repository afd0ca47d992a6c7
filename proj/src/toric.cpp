#include "wdeg/toric.hpp"

#include <algorithm>
#include <stdexcept>

#include "wdeg/matrix.hpp"

namespace wdeg {

namespace {

Ring p_ring(std::size_t n) {
  Ring r;
  for (std::size_t i = 0; i < n; ++i) r.vars.push_back("p" + std::to_string(i));
  return r;
}

RatMatrix to_rat(const std::vector<std::vector<long>>& A) {
  return RatMatrix::from_int_rows(A);
}

}  // namespace

std::vector<std::vector<mpz_class>> integer_kernel(const std::vector<std::vector<long>>& A) {
  std::size_t d = A.size();
  std::size_t n = d == 0 ? 0 : A[0].size();
  std::vector<std::vector<mpz_class>> m(d, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = A[i][j];
  std::vector<std::vector<mpz_class>> u(n, std::vector<mpz_class>(n, 0));
  for (std::size_t j = 0; j < n; ++j) u[j][j] = 1;

  auto col_axpy = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t i = 0; i < d; ++i) m[i][dst] -= q * m[i][src];
    for (std::size_t i = 0; i < n; ++i) u[i][dst] -= q * u[i][src];
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < d; ++i) std::swap(m[i][a], m[i][b]);
    for (std::size_t i = 0; i < n; ++i) std::swap(u[i][a], u[i][b]);
  };
  auto col_neg = [&](std::size_t a) {
    for (std::size_t i = 0; i < d; ++i) m[i][a] = -m[i][a];
    for (std::size_t i = 0; i < n; ++i) u[i][a] = -u[i][a];
  };

  std::size_t col = 0;
  for (std::size_t row = 0; row < d && col < n; ++row) {
    for (;;) {
      // Smallest nonzero |entry| in this row at columns >= col.
      std::size_t best = n;
      for (std::size_t c = col; c < n; ++c) {
        if (m[row][c] == 0) continue;
        if (best == n || abs(m[row][c]) < abs(m[row][best])) best = c;
      }
      if (best == n) break;  // row already zero on the working columns
      if (best != col) col_swap(col, best);
      bool done = true;
      for (std::size_t c = col + 1; c < n; ++c) {
        if (m[row][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[row][c].get_mpz_t(), m[row][col].get_mpz_t());
        col_axpy(c, col, q);
        if (m[row][c] != 0) done = false;
      }
      if (done) {
        if (m[row][col] < 0) col_neg(col);
        ++col;
        break;
      }
    }
  }
  std::vector<std::vector<mpz_class>> kernel;
  for (std::size_t c = col; c < n; ++c) {
    std::vector<mpz_class> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = u[i][c];
    kernel.push_back(std::move(v));
  }
  return kernel;
}

bool row_space_contains_ones(const std::vector<std::vector<long>>& A) {
  if (A.empty()) return false;
  RatMatrix at = to_rat(A).transpose();
  RatVec ones(at.rows(), Rational(1));
  RatVec y;
  return solve_affine(at, ones, y);
}

namespace {

Polynomial kernel_binomial(const std::vector<mpz_class>& u,
                           const std::vector<Rational>& scaling,
                           const MonomialOrder& ord) {
  std::size_t n = u.size();
  Monomial up = Monomial::one(n), um = Monomial::one(n);
  Rational lam_plus(1), lam_minus(1);
  for (std::size_t j = 0; j < n; ++j) {
    long e = static_cast<long>(u[j].get_si());
    if (e > 0) {
      up.e[j] = static_cast<int>(e);
      for (long k = 0; k < e; ++k) lam_plus *= scaling[j];
    } else if (e < 0) {
      um.e[j] = static_cast<int>(-e);
      for (long k = 0; k < -e; ++k) lam_minus *= scaling[j];
    }
  }
  std::vector<Term> ts;
  ts.push_back({up, lam_minus});
  ts.push_back({um, -lam_plus});
  return primitive_integer_form(Polynomial::from_terms(std::move(ts), ord));
}

}  // namespace

Ideal toric_ideal_lattice(const std::vector<std::vector<long>>& A,
                          const std::vector<Rational>& scaling, Budget& budget) {
  if (!row_space_contains_ones(A))
    throw std::invalid_argument("toric ideal: all-ones vector not in the row space");
  std::size_t n = A[0].size();
  Ring ring = p_ring(n);
  MonomialOrder ord = MonomialOrder::grevlex(n);
  Ideal pre{ring, {}};
  for (const auto& u : integer_kernel(A)) {
    Polynomial b = kernel_binomial(u, scaling, ord);
    if (!b.is_zero()) pre.gens.push_back(b);
  }
  if (pre.gens.empty()) return pre;  // the closure is the whole space
  std::vector<std::size_t> all_vars(n);
  for (std::size_t i = 0; i < n; ++i) all_vars[i] = i;
  return saturate_by_variables(pre, all_vars, budget);
}

Ideal toric_ideal_elimination(const std::vector<std::vector<long>>& A,
                              const std::vector<Rational>& scaling, Budget& budget) {
  if (!row_space_contains_ones(A))
    throw std::invalid_argument("toric ideal: all-ones vector not in the row space");
  std::size_t d = A.size();
  std::size_t n = A[0].size();
  Ring ext;
  for (std::size_t i = 0; i < d; ++i) ext.vars.push_back("t" + std::to_string(i));
  ext.vars.push_back("tinv");
  for (std::size_t j = 0; j < n; ++j) ext.vars.push_back("p" + std::to_string(j));
  std::size_t arity = d + 1 + n;
  MonomialOrder ord = MonomialOrder::grevlex(arity);

  Ideal work{ext, {}};
  for (std::size_t j = 0; j < n; ++j) {
    // theta^{a_j^-} * p_j - scaling_j * theta^{a_j^+}
    Monomial lhs = Monomial::one(arity), rhs = Monomial::one(arity);
    for (std::size_t i = 0; i < d; ++i) {
      long e = A[i][j];
      if (e > 0) rhs.e[i] = static_cast<int>(e);
      if (e < 0) lhs.e[i] = static_cast<int>(-e);
    }
    lhs.e[d + 1 + j] = 1;
    std::vector<Term> ts;
    ts.push_back({lhs, Rational(1)});
    ts.push_back({rhs, -scaling[j]});
    work.gens.push_back(Polynomial::from_terms(std::move(ts), ord));
  }
  {
    Monomial prod = Monomial::one(arity);
    for (std::size_t i = 0; i <= d; ++i) prod.e[i] = 1;  // t0..t{d-1} and tinv
    std::vector<Term> ts;
    ts.push_back({prod, Rational(1)});
    ts.push_back({Monomial::one(arity), Rational(-1)});
    work.gens.push_back(Polynomial::from_terms(std::move(ts), ord));
  }
  std::vector<std::size_t> remove(d + 1);
  for (std::size_t i = 0; i <= d; ++i) remove[i] = i;
  Ideal elim = eliminate(work, remove, budget);

  Ring ring = p_ring(n);
  MonomialOrder pord = MonomialOrder::grevlex(n);
  Ideal out{ring, {}};
  for (const auto& p : elim.gens) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
      Monomial m = Monomial::one(n);
      for (std::size_t j = 0; j < n; ++j) m.e[j] = t.m.e[d + 1 + j];
      ts.push_back({std::move(m), t.c});
    }
    out.gens.push_back(primitive_integer_form(Polynomial::from_terms(std::move(ts), pord)));
  }
  return out;
}

ToricModel toric_model_from_matrix(const std::vector<std::vector<long>>& A,
                                   const std::vector<Rational>& scaling,
                                   const std::string& label, Budget& budget) {
  ToricModel m;
  m.label = label;
  m.A = A;
  m.scaling = scaling;
  m.ring = p_ring(A.at(0).size());
  m.ideal = toric_ideal_lattice(A, scaling, budget);
  m.dim_projective = static_cast<int>(rank(to_rat(A))) - 1;
  return m;
}

ToricModel scroll(const std::vector<long>& ns) {
  if (ns.empty()) throw std::invalid_argument("scroll: empty block list");
  for (long nj : ns)
    if (nj < 1) throw std::invalid_argument("scroll: block sizes must be >= 1");
  std::size_t d = ns.size();
  std::size_t n = 0;
  for (long nj : ns) n += static_cast<std::size_t>(nj) + 1;

  ToricModel m;
  m.label = "scroll(";
  for (std::size_t j = 0; j < d; ++j) m.label += (j ? "," : "") + std::to_string(ns[j]);
  m.label += ")";
  m.scaling.assign(n, Rational(1));
  m.ring = p_ring(n);

  m.A.assign(d + 1, std::vector<long>(n, 0));
  std::size_t off = 0;
  for (std::size_t j = 0; j < d; ++j) {
    for (long i = 0; i <= ns[j]; ++i) {
      m.A[0][off + i] = 1;
      if (j + 1 < d) m.A[1 + j][off + i] = 1;  // last block's indicator is dependent
      m.A[d][off + i] = i;
    }
    off += static_cast<std::size_t>(ns[j]) + 1;
  }

  // 2-minors of the concatenated 2 x N block matrix.
  MonomialOrder ord = MonomialOrder::grevlex(n);
  std::vector<std::pair<std::size_t, std::size_t>> cols;  // (top index, bottom index)
  off = 0;
  for (std::size_t j = 0; j < d; ++j) {
    for (long i = 0; i < ns[j]; ++i)
      cols.emplace_back(off + i, off + i + 1);
    off += static_cast<std::size_t>(ns[j]) + 1;
  }
  m.ideal.ring = m.ring;
  for (std::size_t a = 0; a < cols.size(); ++a)
    for (std::size_t b = a + 1; b < cols.size(); ++b) {
      Monomial m1 = Monomial::one(n), m2 = Monomial::one(n);
      m1.e[cols[a].first] += 1;
      m1.e[cols[b].second] += 1;
      m2.e[cols[b].first] += 1;
      m2.e[cols[a].second] += 1;
      if (m1 == m2) continue;
      std::vector<Term> ts{{m1, Rational(1)}, {m2, Rational(-1)}};
      Polynomial minor = Polynomial::from_terms(std::move(ts), ord);
      bool dup = false;
      for (const auto& g : m.ideal.gens)
        if (g == minor || g == neg(minor)) dup = true;
      if (!dup) m.ideal.gens.push_back(std::move(minor));
    }
  m.dim_projective = static_cast<int>(d);
  return m;
}

ToricModel hirzebruch(long a, long b) {
  if (a < 1 || a > b) throw std::invalid_argument("hirzebruch: need 1 <= a <= b");
  ToricModel m = scroll({a, b});
  m.label = "hirzebruch(" + std::to_string(a) + "," + std::to_string(b) + ")";
  std::size_t n = static_cast<std::size_t>(a + b + 2);
  m.A.assign(3, std::vector<long>(n, 0));
  for (long i = 0; i <= a; ++i) {
    m.A[0][i] = 1;
    m.A[1][i] = i;
  }
  for (long i = 0; i <= b; ++i) {
    m.A[0][a + 1 + i] = 1;
    m.A[1][a + 1 + i] = i;
    m.A[2][a + 1 + i] = 1;
  }
  m.dim_projective = 2;
  return m;
}

ToricModel star_tree(const std::vector<long>& leaf_dims, long hub_dim, Budget& budget) {
  if (hub_dim < 1) throw std::invalid_argument("star_tree: hub needs >= 1 states");
  for (long dl : leaf_dims)
    if (dl < 2) throw std::invalid_argument("star_tree: leaf state counts must be >= 2");
  std::size_t nl = leaf_dims.size();
  std::size_t slice = 1;
  for (long dl : leaf_dims) slice *= static_cast<std::size_t>(dl);
  std::size_t n = slice * static_cast<std::size_t>(hub_dim);

  ToricModel m;
  m.label = "star_tree(";
  for (std::size_t j = 0; j < nl; ++j) m.label += (j ? "," : "") + std::to_string(leaf_dims[j]);
  m.label += ";" + std::to_string(hub_dim) + ")";
  m.scaling.assign(n, Rational(1));
  m.ring = p_ring(n);

  // Parameter rows: one block (leaf value, hub value) per leaf.
  std::size_t nrows = 0;
  for (long dl : leaf_dims) nrows += static_cast<std::size_t>(dl) * hub_dim;
  m.A.assign(nrows, std::vector<long>(n, 0));
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t hub = s / slice;
    std::size_t rest = s % slice;
    std::vector<std::size_t> leaf(nl);
    for (std::size_t j = nl; j-- > 0;) {
      leaf[j] = rest % leaf_dims[j];
      rest /= leaf_dims[j];
    }
    std::size_t row_off = 0;
    for (std::size_t j = 0; j < nl; ++j) {
      m.A[row_off + leaf[j] * hub_dim + hub][s] = 1;
      row_off += static_cast<std::size_t>(leaf_dims[j]) * hub_dim;
    }
  }
  m.dim_projective = static_cast<int>(rank(to_rat(m.A))) - 1;

  // Ideal: sum over hub slices of the complete-independence ideal.
  std::vector<std::vector<long>> A_ind;
  {
    std::size_t rows = 0;
    for (long dl : leaf_dims) rows += static_cast<std::size_t>(dl);
    A_ind.assign(rows, std::vector<long>(slice, 0));
    for (std::size_t s = 0; s < slice; ++s) {
      std::size_t rest = s;
      std::vector<std::size_t> leaf(nl);
      for (std::size_t j = nl; j-- > 0;) {
        leaf[j] = rest % leaf_dims[j];
        rest /= leaf_dims[j];
      }
      std::size_t row_off = 0;
      for (std::size_t j = 0; j < nl; ++j) {
        A_ind[row_off + leaf[j]][s] = 1;
        row_off += static_cast<std::size_t>(leaf_dims[j]);
      }
    }
  }
  Ideal indep = toric_ideal_lattice(A_ind, std::vector<Rational>(slice, Rational(1)), budget);
  MonomialOrder ord = MonomialOrder::grevlex(n);
  m.ideal.ring = m.ring;
  for (long k = 0; k < hub_dim; ++k) {
    std::size_t off = static_cast<std::size_t>(k) * slice;
    for (const auto& g : indep.gens) {
      std::vector<Term> ts;
      for (const auto& t : g.terms()) {
        Monomial mo = Monomial::one(n);
        for (std::size_t j = 0; j < slice; ++j) mo.e[off + j] = t.m.e[j];
        ts.push_back({std::move(mo), t.c});
      }
      m.ideal.gens.push_back(Polynomial::from_terms(std::move(ts), ord));
    }
  }
  return m;
}

namespace {

ToricModel binary_four_site(const std::string& label, bool with_cycle_edge, Budget& budget) {
  std::size_t n = 16;
  std::vector<std::vector<long>> A;
  auto state = [](std::size_t s, int pos) { return (s >> (3 - pos)) & 1; };
  auto add_edge_rows = [&](int va, int vb) {
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        std::vector<long> row(n, 0);
        for (std::size_t s = 0; s < n; ++s)
          if (state(s, va) == static_cast<std::size_t>(x) &&
              state(s, vb) == static_cast<std::size_t>(y))
            row[s] = 1;
        A.push_back(std::move(row));
      }
  };
  add_edge_rows(0, 1);
  add_edge_rows(1, 2);
  add_edge_rows(2, 3);
  if (with_cycle_edge) add_edge_rows(0, 3);
  return toric_model_from_matrix(A, std::vector<Rational>(n, Rational(1)), label, budget);
}

}  // namespace

ToricModel path4_binary(Budget& budget) {
  return binary_four_site("path4_binary", false, budget);
}

ToricModel cycle4_binary(Budget& budget) {
  return binary_four_site("cycle4_binary", true, budget);
}

ToricModel no3way(long r, long s, long t, Budget& budget) {
  if (r < 2 || s < 2 || t < 2) throw std::invalid_argument("no3way: state counts must be >= 2");
  std::size_t n = static_cast<std::size_t>(r) * s * t;
  std::vector<std::vector<long>> A;
  auto idx = [&](long i, long j, long k) {
    return static_cast<std::size_t>((i * s + j) * t + k);
  };
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < s; ++j) {
      std::vector<long> row(n, 0);
      for (long k = 0; k < t; ++k) row[idx(i, j, k)] = 1;
      A.push_back(std::move(row));
    }
  for (long j = 0; j < s; ++j)
    for (long k = 0; k < t; ++k) {
      std::vector<long> row(n, 0);
      for (long i = 0; i < r; ++i) row[idx(i, j, k)] = 1;
      A.push_back(std::move(row));
    }
  for (long i = 0; i < r; ++i)
    for (long k = 0; k < t; ++k) {
      std::vector<long> row(n, 0);
      for (long j = 0; j < s; ++j) row[idx(i, j, k)] = 1;
      A.push_back(std::move(row));
    }
  std::string label = "no3way(" + std::to_string(r) + "," + std::to_string(s) + "," +
                      std::to_string(t) + ")";
  return toric_model_from_matrix(A, std::vector<Rational>(n, Rational(1)), label, budget);
}

bool parametrization_annihilates(const ToricModel& m) {
  std::size_t d = m.A.size();
  std::size_t n = m.A[0].size();
  for (const auto& row : m.A)
    for (long e : row)
      if (e < 0) throw std::invalid_argument("parametrization check needs A >= 0");
  MonomialOrder ord = MonomialOrder::grevlex(d);
  for (const auto& g : m.ideal.gens) {
    std::vector<Term> ts;
    for (const auto& t : g.terms()) {
      Monomial theta = Monomial::one(d);
      Rational c = t.c;
      for (std::size_t j = 0; j < n; ++j) {
        for (int k = 0; k < t.m.e[j]; ++k) c *= m.scaling[j];
        for (std::size_t i = 0; i < d; ++i)
          theta.e[i] += t.m.e[j] * static_cast<int>(m.A[i][j]);
      }
      ts.push_back({std::move(theta), c});
    }
    if (!Polynomial::from_terms(std::move(ts), ord).is_zero()) return false;
  }
  return true;
}

}  // namespace wdeg
