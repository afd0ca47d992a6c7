#include "wdeg/groebner.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "wdeg/matrix.hpp"

namespace wdeg {

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord, Budget& budget) {
  Polynomial rem;
  Polynomial cur = f;
  std::vector<Term> rem_terms;
  while (!cur.is_zero()) {
    budget.tick();
    const Term& lt = cur.lt();
    const Polynomial* reducer = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && divides(g.lt().m, lt.m)) {
        reducer = &g;
        break;
      }
    }
    if (reducer) {
      Term q{div(lt.m, reducer->lt().m), lt.c / reducer->lt().c};
      cur = sub(cur, mul_term(*reducer, q, ord), ord);
    } else {
      rem_terms.push_back(lt);
      // lt is the largest term; the tail is already sorted.
      std::vector<Term> tail_terms(cur.terms().begin() + 1, cur.terms().end());
      cur = Polynomial::from_sorted_terms(std::move(tail_terms));
    }
  }
  // Remainder terms were emitted in strictly decreasing order.
  return Polynomial::from_sorted_terms(std::move(rem_terms));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb, Budget& budget) {
  return normal_form(f, gb.basis, gb.order, budget);
}

namespace {

Polynomial spoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  Monomial l = lcm(f.lt().m, g.lt().m);
  Term tf{div(l, f.lt().m), g.lt().c};
  Term tg{div(l, g.lt().m), f.lt().c};
  return sub(mul_term(f, tf, ord), mul_term(g, tg, ord), ord);
}

struct Pair {
  std::size_t i, j;
  Monomial l;
};

// Deterministic normal selection: smallest lcm in the order, then indices.
bool pair_less(const Pair& a, const Pair& b, const MonomialOrder& ord) {
  int c = ord.compare(a.l, b.l);
  if (c != 0) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

// Gebauer-Moller update of the pair set for a new element with index t.
void gm_update(std::vector<Pair>& pairs, std::vector<Polynomial>& g, std::size_t t) {
  const Monomial& lt_t = g[t].lt().m;
  std::vector<Pair> cand;
  for (std::size_t i = 0; i < t; ++i) {
    if (g[i].is_zero()) continue;
    cand.push_back({i, t, lcm(g[i].lt().m, lt_t)});
  }
  // Discard (i,t) when another candidate's lcm properly divides it.
  std::vector<Pair> kept;
  for (const auto& p : cand) {
    bool drop = false;
    if (!coprime(g[p.i].lt().m, lt_t)) {
      for (const auto& q : cand) {
        if (q.i == p.i) continue;
        if (divides(q.l, p.l) && !(q.l == p.l)) {
          drop = true;
          break;
        }
        // Among equal lcms keep the smallest index.
        if (q.l == p.l && q.i < p.i) {
          drop = true;
          break;
        }
      }
    }
    if (!drop) kept.push_back(p);
  }
  // Buchberger's first criterion: discard coprime leading terms.
  std::vector<Pair> fresh;
  for (const auto& p : kept)
    if (!coprime(g[p.i].lt().m, lt_t)) fresh.push_back(p);
  // Prune old pairs made redundant by the new leading term.
  std::vector<Pair> surviving;
  for (const auto& p : pairs) {
    bool redundant = divides(lt_t, p.l) &&
                     !(lcm(g[p.i].lt().m, lt_t) == p.l) &&
                     !(lcm(g[p.j].lt().m, lt_t) == p.l);
    if (!redundant) surviving.push_back(p);
  }
  surviving.insert(surviving.end(), fresh.begin(), fresh.end());
  pairs = std::move(surviving);
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> g, const MonomialOrder& ord,
                                    Budget& budget) {
  // Drop elements whose leading term is divisible by another's, then fully
  // reduce each element against the rest.
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i].is_zero()) continue;
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (i == j || g[j].is_zero()) continue;
        if (divides(g[j].lt().m, g[i].lt().m)) {
          std::vector<Polynomial> others;
          for (std::size_t k = 0; k < g.size(); ++k)
            if (k != i && !g[k].is_zero()) others.push_back(g[k]);
          g[i] = normal_form(g[i], others, ord, budget);
          changed = true;
          break;
        }
      }
    }
    if (!changed) break;
  }
  std::vector<Polynomial> out;
  for (auto& p : g)
    if (!p.is_zero()) out.push_back(monic(p));
  // Tail-reduce for the unique reduced basis.
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t k = 0; k < out.size(); ++k)
      if (k != i) others.push_back(out[k]);
    out[i] = monic(normal_form(out[i], others, ord, budget));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.compare(a.lt().m, b.lt().m) < 0;
  });
  return out;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord, Budget& budget) {
  std::vector<Polynomial> g;
  for (const auto& p : ideal.gens) {
    Polynomial q = p.resorted(ord);
    if (!q.is_zero()) g.push_back(monic(q));
  }
  std::sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.compare(a.lt().m, b.lt().m) < 0;
  });
  std::vector<Pair> pairs;
  for (std::size_t t = 0; t < g.size(); ++t) gm_update(pairs, g, t);

  while (!pairs.empty()) {
    budget.tick();
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (pair_less(pairs[k], pairs[best], ord)) best = k;
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + best);
    Polynomial s = spoly(g[p.i], g[p.j], ord);
    Polynomial r = normal_form(s, g, ord, budget);
    if (r.is_zero()) continue;
    g.push_back(monic(r));
    gm_update(pairs, g, g.size() - 1);
  }
  GroebnerBasis gb{ideal.ring, ord, interreduce(std::move(g), ord, budget)};
  return gb;
}

bool contains_one(const GroebnerBasis& gb) {
  return gb.basis.size() == 1 && gb.basis[0].is_constant() && !gb.basis[0].is_zero();
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& remove, Budget& budget) {
  std::vector<char> mask(ideal.ring.arity(), 0);
  for (auto v : remove) mask[v] = 1;
  MonomialOrder ord = MonomialOrder::elimination(ideal.ring.arity(), mask);
  GroebnerBasis gb = buchberger(ideal, ord, budget);
  Ideal out{ideal.ring, {}};
  for (const auto& p : gb.basis) {
    bool clean = true;
    for (auto v : remove)
      if (p.uses_var(v)) {
        clean = false;
        break;
      }
    if (clean) out.gens.push_back(p);
  }
  return out;
}

Ideal saturate(const Ideal& ideal, const Polynomial& f, Budget& budget) {
  if (f.is_zero()) throw std::invalid_argument("saturate: zero polynomial");
  std::size_t n = ideal.ring.arity();
  Ring ext = ideal.ring.extended("t@sat");
  auto lift = [&](const Polynomial& p) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
      Monomial m = t.m;
      m.e.push_back(0);
      ts.push_back({std::move(m), t.c});
    }
    return Polynomial::from_terms(std::move(ts), MonomialOrder::grevlex(n + 1));
  };
  Ideal work{ext, {}};
  for (const auto& p : ideal.gens) work.gens.push_back(lift(p));
  // 1 - t*f
  MonomialOrder eord = MonomialOrder::grevlex(n + 1);
  Polynomial tf = mul(lift(f), Polynomial::variable(n + 1, n), eord);
  work.gens.push_back(sub(Polynomial::constant(n + 1, Rational(1)), tf, eord));
  Ideal elim = eliminate(work, {n}, budget);
  Ideal out{ideal.ring, {}};
  for (const auto& p : elim.gens) {
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
      Monomial m = t.m;
      m.e.pop_back();
      ts.push_back({std::move(m), t.c});
    }
    out.gens.push_back(Polynomial::from_terms(std::move(ts), MonomialOrder::grevlex(n)));
  }
  return out;
}

Ideal saturate_by_variable(const Ideal& ideal, std::size_t var, Budget& budget) {
  for (const auto& p : ideal.gens)
    if (!p.is_homogeneous()) throw NotHomogeneous();
  MonomialOrder ord = MonomialOrder::grevlex_last(ideal.ring.arity(), var);
  GroebnerBasis gb = buchberger(ideal, ord, budget);
  Ideal out{ideal.ring, {}};
  for (const auto& p : gb.basis) {
    int k = p.terms().empty() ? 0 : p.terms()[0].m.e[var];
    for (const auto& t : p.terms()) k = std::min(k, t.m.e[var]);
    if (k == 0) {
      out.gens.push_back(p);
      continue;
    }
    std::vector<Term> ts;
    for (const auto& t : p.terms()) {
      Monomial m = t.m;
      m.e[var] -= k;
      ts.push_back({std::move(m), t.c});
    }
    out.gens.push_back(Polynomial::from_terms(std::move(ts), ord));
  }
  return out;
}

Ideal saturate_by_variables(const Ideal& ideal, const std::vector<std::size_t>& vars,
                            Budget& budget) {
  Ideal cur = ideal;
  for (auto v : vars) cur = saturate_by_variable(cur, v, budget);
  return cur;
}

std::vector<Monomial> minimal_monomial_generators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.e < b.e; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && divides(gens[j], gens[i]) && !(gens[i] == gens[j] && j > i))
        redundant = true;
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

std::vector<Monomial> leading_monomials(const GroebnerBasis& gb) {
  std::vector<Monomial> lts;
  for (const auto& p : gb.basis) lts.push_back(p.lt().m);
  return minimal_monomial_generators(std::move(lts));
}

namespace {

// Smallest hitting set of the generator supports, by branch and bound.
void hitting_set(const std::vector<std::vector<std::size_t>>& supports,
                 std::vector<char>& chosen, std::size_t chosen_count,
                 std::size_t& best, Budget& budget) {
  budget.tick();
  if (chosen_count >= best) return;
  const std::vector<std::size_t>* open = nullptr;
  for (const auto& s : supports) {
    bool hit = false;
    for (auto v : s)
      if (chosen[v]) {
        hit = true;
        break;
      }
    if (!hit && (!open || s.size() < open->size())) open = &s;
  }
  if (!open) {
    best = chosen_count;
    return;
  }
  for (auto v : *open) {
    chosen[v] = 1;
    hitting_set(supports, chosen, chosen_count + 1, best, budget);
    chosen[v] = 0;
  }
}

int dimension_of_monomial_ideal(const std::vector<Monomial>& gens, std::size_t arity,
                                Budget& budget) {
  for (const auto& m : gens)
    if (m.is_one()) return -1;
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& m : gens) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < m.e.size(); ++i)
      if (m.e[i] > 0) s.push_back(i);
    supports.push_back(std::move(s));
  }
  std::size_t best = arity + 1;
  std::vector<char> chosen(arity, 0);
  hitting_set(supports, chosen, 0, best, budget);
  if (best > arity) best = arity;  // no generators
  return static_cast<int>(arity - best);
}

void count_standard_monomials(const std::vector<Monomial>& gens, std::size_t arity,
                              Monomial& partial, std::size_t var,
                              const std::vector<int>& bound, long& count, Budget& budget) {
  budget.tick();
  if (var == arity) {
    ++count;
    return;
  }
  for (int e = 0; e <= bound[var]; ++e) {
    partial.e[var] = e;
    // Prune when the partial exponent vector is already divisible by a
    // generator supported on the assigned variables.
    bool divisible = false;
    for (const auto& g : gens) {
      bool applies = true;
      for (std::size_t i = 0; i < arity && applies; ++i) {
        if (i <= var) {
          if (g.e[i] > partial.e[i]) applies = false;
        } else if (g.e[i] > 0) {
          applies = false;
        }
      }
      if (applies) {
        divisible = true;
        break;
      }
    }
    if (divisible) continue;
    count_standard_monomials(gens, arity, partial, var + 1, bound, count, budget);
  }
  partial.e[var] = 0;
}

struct MonListHash {
  std::size_t operator()(const std::vector<Monomial>& v) const {
    std::size_t h = 14695981039346656037ull;
    for (const auto& m : v) h = (h ^ m.hash()) * 1099511628211ull;
    return h;
  }
};

using HilbertPoly = std::vector<mpz_class>;  // dense in t

HilbertPoly hp_one() { return {mpz_class(1)}; }

HilbertPoly hp_sub_shift(const HilbertPoly& a, const HilbertPoly& b, int shift) {
  // a - t^shift * b
  HilbertPoly r = a;
  if (r.size() < b.size() + shift) r.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= b[i];
  while (r.size() > 1 && r.back() == 0) r.pop_back();
  return r;
}

HilbertPoly hp_mul(const HilbertPoly& a, const HilbertPoly& b) {
  HilbertPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

class HilbertComputer {
 public:
  HilbertComputer(std::size_t arity, Budget& budget) : arity_(arity), budget_(budget) {}

  HilbertPoly numerator(std::vector<Monomial> gens) {
    gens = minimal_monomial_generators(std::move(gens));
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.e < b.e; });
    auto it = memo_.find(gens);
    if (it != memo_.end()) return it->second;
    budget_.tick();
    HilbertPoly result = compute(gens);
    memo_.emplace(std::move(gens), result);
    return result;
  }

 private:
  HilbertPoly compute(const std::vector<Monomial>& gens) {
    if (gens.empty()) return hp_one();
    if (gens.size() == 1) {
      if (gens[0].is_one()) return HilbertPoly{mpz_class(0)};
      return hp_sub_shift(hp_one(), hp_one(), gens[0].deg());
    }
    // Split into blocks with pairwise disjoint support: numerators multiply.
    {
      std::vector<int> comp(gens.size(), -1);
      int ncomp = 0;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (comp[i] != -1) continue;
        comp[i] = ncomp;
        std::vector<std::size_t> stack{i};
        while (!stack.empty()) {
          auto a = stack.back();
          stack.pop_back();
          for (std::size_t b = 0; b < gens.size(); ++b) {
            if (comp[b] != -1) continue;
            if (!coprime(gens[a], gens[b])) {
              comp[b] = ncomp;
              stack.push_back(b);
            }
          }
        }
        ++ncomp;
      }
      if (ncomp > 1) {
        HilbertPoly prod = hp_one();
        for (int c = 0; c < ncomp; ++c) {
          std::vector<Monomial> blk;
          for (std::size_t i = 0; i < gens.size(); ++i)
            if (comp[i] == c) blk.push_back(gens[i]);
          prod = hp_mul(prod, numerator(blk));
        }
        return prod;
      }
    }
    // Pivot on the most frequent variable: N(I) = N(I + (v)) + t * N(I : v).
    std::vector<std::size_t> freq(arity_, 0);
    for (const auto& m : gens)
      for (std::size_t i = 0; i < arity_; ++i)
        if (m.e[i] > 0) ++freq[i];
    std::size_t v = 0;
    for (std::size_t i = 1; i < arity_; ++i)
      if (freq[i] > freq[v]) v = i;

    std::vector<Monomial> plus;   // I + (v)
    std::vector<Monomial> colon;  // I : v
    Monomial mv = Monomial::one(arity_);
    mv.e[v] = 1;
    plus.push_back(mv);
    for (const auto& m : gens) {
      if (m.e[v] == 0) plus.push_back(m);
      Monomial q = m;
      if (q.e[v] > 0) q.e[v] -= 1;
      colon.push_back(q);
    }
    HilbertPoly a = numerator(plus);
    HilbertPoly b = numerator(colon);
    HilbertPoly r = a;
    if (r.size() < b.size() + 1) r.resize(b.size() + 1, 0);
    for (std::size_t i = 0; i < b.size(); ++i) r[i + 1] += b[i];
    while (r.size() > 1 && r.back() == 0) r.pop_back();
    return r;
  }

  std::size_t arity_;
  Budget& budget_;
  std::unordered_map<std::vector<Monomial>, HilbertPoly, MonListHash> memo_;
};

}  // namespace

std::vector<mpz_class> hilbert_numerator(const std::vector<Monomial>& lt_gens,
                                         std::size_t arity, Budget& budget) {
  HilbertComputer hc(arity, budget);
  return hc.numerator(lt_gens);
}

int dimension_from_gb(const GroebnerBasis& gb) {
  Budget b;
  auto lts = leading_monomials(gb);
  return dimension_of_monomial_ideal(lts, gb.ring.arity(), b);
}

int dimension(const Ideal& ideal, Budget& budget) {
  MonomialOrder ord = MonomialOrder::grevlex(ideal.ring.arity());
  GroebnerBasis gb = buchberger(ideal, ord, budget);
  return dimension_from_gb(gb);
}

int degree_zero_dim_from_gb(const GroebnerBasis& gb) {
  Budget b;
  auto lts = leading_monomials(gb);
  std::size_t arity = gb.ring.arity();
  for (const auto& m : lts)
    if (m.is_one()) return 0;
  int d = dimension_of_monomial_ideal(lts, arity, b);
  if (d != 0) throw NotZeroDimensional();
  // Zero-dimensionality gives a pure power bound per variable.
  std::vector<int> bound(arity, 0);
  for (std::size_t v = 0; v < arity; ++v) {
    int pure = -1;
    for (const auto& m : lts) {
      bool pure_v = m.e[v] > 0;
      for (std::size_t i = 0; i < arity && pure_v; ++i)
        if (i != v && m.e[i] > 0) pure_v = false;
      if (pure_v) pure = pure < 0 ? m.e[v] : std::min(pure, m.e[v]);
    }
    if (pure < 0) throw NotZeroDimensional();
    bound[v] = pure - 1;
  }
  long count = 0;
  Monomial partial = Monomial::one(arity);
  count_standard_monomials(lts, arity, partial, 0, bound, count, b);
  return static_cast<int>(count);
}

int degree_zero_dim(const Ideal& ideal, Budget& budget) {
  MonomialOrder ord = MonomialOrder::grevlex(ideal.ring.arity());
  GroebnerBasis gb = buchberger(ideal, ord, budget);
  return degree_zero_dim_from_gb(gb);
}

int homogeneous_degree(const Ideal& ideal, Budget& budget) {
  for (const auto& p : ideal.gens)
    if (!p.is_homogeneous()) throw NotHomogeneous();
  MonomialOrder ord = MonomialOrder::grevlex(ideal.ring.arity());
  GroebnerBasis gb = buchberger(ideal, ord, budget);
  auto lts = leading_monomials(gb);
  std::size_t n = ideal.ring.arity();
  int dim = dimension_of_monomial_ideal(lts, n, budget);
  if (dim < 0) throw std::invalid_argument("homogeneous_degree: improper ideal");
  HilbertPoly num = hilbert_numerator(lts, n, budget);
  // Cancel (1-t)^(n-dim); each division is exact for the leading-term ideal.
  for (int k = 0; k < static_cast<int>(n) - dim; ++k) {
    mpz_class total = 0;
    for (const auto& c : num) total += c;
    if (total != 0) throw std::logic_error("homogeneous_degree: inexact (1-t) division");
    // q = num / (1-t): q_i = sum_{j <= i} num_j
    HilbertPoly q(num.size() ? num.size() - 1 : 0, 0);
    mpz_class acc = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) {
      acc += num[i];
      q[i] = acc;
    }
    num = std::move(q);
    if (num.empty()) num = {mpz_class(0)};
  }
  mpz_class deg = 0;
  for (const auto& c : num) deg += c;
  return static_cast<int>(deg.get_si());
}

LinearReduction reduce_by_linear(const Ring& ring, const std::vector<Polynomial>& linear) {
  std::size_t n = ring.arity();
  LinearReduction red;
  // Rows: coefficients of x_0..x_{n-1} plus the constant.
  std::vector<RatVec> rows;
  for (const auto& p : linear) {
    RatVec row(n + 1, Rational(0));
    for (const auto& t : p.terms()) {
      if (t.m.is_one()) {
        row[n] = t.c;
        continue;
      }
      int var = -1;
      for (std::size_t i = 0; i < n; ++i) {
        if (t.m.e[i] == 1 && t.m.deg() == 1) var = static_cast<int>(i);
      }
      if (var < 0) throw std::invalid_argument("reduce_by_linear: generator not affine-linear");
      row[var] = t.c;
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    red.reduced_ring = ring;
    red.free_vars.resize(n);
    for (std::size_t i = 0; i < n; ++i) red.free_vars[i] = i;
    for (std::size_t i = 0; i < n; ++i)
      red.substitution.push_back(Polynomial::variable(n, i));
    return red;
  }
  auto [r, pivots] = rref(RatMatrix::from_rows(rows));
  if (!pivots.empty() && pivots.back() == n) {
    red.consistent = false;  // 0 = 1 among the constraints
    return red;
  }
  std::vector<char> is_pivot(n, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) red.free_vars.push_back(i);
  red.reduced_ring = ring.restricted(red.free_vars);
  std::size_t m = red.free_vars.size();
  MonomialOrder ord = MonomialOrder::grevlex(m);
  std::vector<int> free_pos(n, -1);
  for (std::size_t k = 0; k < m; ++k) free_pos[red.free_vars[k]] = static_cast<int>(k);
  red.substitution.assign(n, Polynomial::zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_pivot[i]) {
      red.substitution[i] = Polynomial::variable(m, free_pos[i]);
      continue;
    }
    // Solve row: x_i = -(sum over free vars) - constant.
    std::size_t prow = 0;
    while (pivots[prow] != i) ++prow;
    std::vector<Term> ts;
    for (std::size_t jv = 0; jv < n; ++jv) {
      if (jv == i || r.at(prow, jv).is_zero()) continue;
      Monomial mo = Monomial::one(m);
      mo.e[free_pos[jv]] = 1;
      ts.push_back({std::move(mo), -r.at(prow, jv)});
    }
    if (!r.at(prow, n).is_zero()) ts.push_back({Monomial::one(m), -r.at(prow, n)});
    red.substitution[i] = Polynomial::from_terms(std::move(ts), ord);
  }
  return red;
}

Polynomial apply_linear_reduction(const LinearReduction& red, const Polynomial& p,
                                  const MonomialOrder& reduced_ord) {
  std::size_t m = red.reduced_ring.arity();
  Polynomial out;
  std::vector<std::vector<Polynomial>> powers(red.substitution.size());
  for (auto& pw : powers) pw.push_back(Polynomial::constant(m, Rational(1)));
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(m, t.c);
    for (std::size_t v = 0; v < t.m.e.size(); ++v) {
      int k = t.m.e[v];
      if (k == 0) continue;
      auto& pw = powers[v];
      while (static_cast<int>(pw.size()) <= k)
        pw.push_back(mul(pw.back(), red.substitution[v], reduced_ord));
      term = mul(term, pw[k], reduced_ord);
    }
    out = add(out, term, reduced_ord);
  }
  return out;
}

}  // namespace wdeg
