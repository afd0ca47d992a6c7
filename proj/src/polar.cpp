#include "wdeg/polar.hpp"

#include <algorithm>
#include <map>

#include "wdeg/matrix.hpp"
#include "wdeg/rng.hpp"

namespace wdeg {

bool MultiDegree::palindromic() const {
  if (delta.empty()) return true;
  int lo = delta.begin()->first, hi = delta.rbegin()->first;
  for (int j = lo; j <= hi; ++j)
    if (at(j) != at(lo + hi - j)) return false;
  return true;
}

std::string pretty(const MultiDegree& md) {
  if (md.delta.empty()) return "0";
  std::string out;
  for (const auto& [j, d] : md.delta) {
    if (!out.empty()) out += "+";
    out += std::to_string(d);
    int se = static_cast<int>(md.ambient) + 1 - j;
    if (se > 0) out += "*s" + (se > 1 ? "^" + std::to_string(se) : "");
    if (j > 0) out += "*t" + (j > 1 ? "^" + std::to_string(j) : "");
  }
  return out;
}

MultiDegree scroll_polar_degrees(const std::vector<long>& ns) {
  if (ns.size() < 2) throw std::invalid_argument("scroll polar degrees: need d >= 2");
  long N = 0;
  for (long nj : ns) {
    if (nj < 1) throw std::invalid_argument("scroll polar degrees: block sizes >= 1");
    N += nj;
  }
  int d = static_cast<int>(ns.size());
  MultiDegree md;
  md.ambient = static_cast<std::size_t>(N + d - 1);
  md.delta[d - 1] = N;
  md.delta[d] = 2 * (N - 1);
  md.delta[d + 1] = N;
  return md;
}

MultiDegree hirzebruch_polar_degrees(long a, long b) {
  if (a > b) throw std::invalid_argument("hirzebruch polar degrees: need a <= b");
  MultiDegree md;
  md.ambient = static_cast<std::size_t>(a + b + 1);
  md.delta[1] = a + b;
  md.delta[2] = 2 * (a + b - 1);
  md.delta[3] = a + b;
  return md;
}

MultiDegree multidegree_product(const MultiDegree& h1, const MultiDegree& h2) {
  MultiDegree out;
  out.ambient = h1.ambient + h2.ambient + 1;
  for (const auto& [i, di] : h1.delta)
    for (const auto& [j, dj] : h2.delta) out.delta[i + j] += di * dj;
  for (auto it = out.delta.begin(); it != out.delta.end();)
    it = it->second == 0 ? out.delta.erase(it) : std::next(it);
  return out;
}

MultiDegree star_tree_multidegree(const MultiDegree& h, long K) {
  if (K < 1) throw std::invalid_argument("star_tree_multidegree: K >= 1");
  MultiDegree out = h;
  for (long k = 1; k < K; ++k) out = multidegree_product(out, h);
  return out;
}

namespace {

// Determinant of a square polynomial matrix by first-row expansion with a
// submatrix memo shared across sibling minors.
class PolyDet {
 public:
  PolyDet(const std::vector<std::vector<Polynomial>>& m, const MonomialOrder& ord,
          Budget& budget)
      : m_(m), ord_(ord), budget_(budget) {}

  Polynomial minor(std::uint32_t row_mask, std::uint32_t col_mask) {
    auto key = (static_cast<std::uint64_t>(row_mask) << 32) | col_mask;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    budget_.tick();
    Polynomial result;
    int r = __builtin_ctz(row_mask);
    std::uint32_t rest_rows = row_mask & (row_mask - 1);
    if (rest_rows == 0) {
      int c = __builtin_ctz(col_mask);
      result = m_[r][c];
    } else {
      int sign = 1;
      for (std::uint32_t cm = col_mask; cm; cm &= cm - 1) {
        int c = __builtin_ctz(cm);
        if (!m_[r][c].is_zero()) {
          Polynomial sub_det = minor(rest_rows, col_mask & ~(1u << c));
          Polynomial contrib = mul(m_[r][c], sub_det, ord_);
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
  std::map<std::uint64_t, Polynomial> memo_;
};

void subsets_of_size(std::uint32_t universe, int k, std::uint32_t cur, int start,
                     std::vector<std::uint32_t>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < 32; ++i)
    if (universe & (1u << i)) subsets_of_size(universe, k - 1, cur | (1u << i), i + 1, out);
}

std::vector<std::uint32_t> masks_of_size(int n, int k) {
  std::vector<std::uint32_t> out;
  std::uint32_t universe = n >= 32 ? 0xffffffffu : ((1u << n) - 1);
  subsets_of_size(universe, k, 0, 0, out);
  return out;
}

// Lift a polynomial in p_0..p_n into the (p, u) ring.
Polynomial lift_to_pu(const Polynomial& f, std::size_t ncoords, const MonomialOrder& ord) {
  std::vector<Term> ts;
  for (const auto& t : f.terms()) {
    Monomial m = Monomial::one(2 * ncoords);
    for (std::size_t j = 0; j < ncoords; ++j) m.e[j] = t.m.e[j];
    ts.push_back({std::move(m), t.c});
  }
  return Polynomial::from_terms(std::move(ts), ord);
}

Ring pu_ring(const Ring& p) {
  Ring r = p;
  for (std::size_t i = 0; i < p.arity(); ++i) r.vars.push_back("u" + std::to_string(i));
  return r;
}

std::vector<std::size_t> pivot_rows(const std::vector<std::vector<long>>& A) {
  auto [r, pivots] = rref(RatMatrix::from_int_rows(A).transpose());
  return pivots;  // pivot columns of A^T = independent rows of A
}

}  // namespace

Ideal conormal_ideal_toric(const ToricModel& m, Budget& budget) {
  std::size_t nc = m.ring.arity();
  Ring ring = pu_ring(m.ring);
  MonomialOrder ord = MonomialOrder::grevlex(2 * nc);
  Ideal work{ring, {}};
  for (const auto& g : m.ideal.gens) work.gens.push_back(lift_to_pu(g, nc, ord));
  for (auto ri : pivot_rows(m.A)) {
    std::vector<Term> ts;
    for (std::size_t j = 0; j < nc; ++j) {
      if (m.A[ri][j] == 0) continue;
      Monomial mo = Monomial::one(2 * nc);
      mo.e[j] = 1;
      mo.e[nc + j] = 1;
      ts.push_back({std::move(mo), Rational(m.A[ri][j])});
    }
    Polynomial b = Polynomial::from_terms(std::move(ts), ord);
    if (!b.is_zero()) work.gens.push_back(std::move(b));
  }
  std::vector<std::size_t> pvars(nc);
  for (std::size_t j = 0; j < nc; ++j) pvars[j] = j;
  return saturate_by_variables(work, pvars, budget);
}

Ideal conormal_ideal(const ToricModel& m, Budget& budget, std::uint64_t seed) {
  std::size_t nc = m.ring.arity();
  int dim_cone = m.dim_projective + 1;
  int c = static_cast<int>(nc) - dim_cone;  // codim of the cone = codim(X)
  Ring ring = pu_ring(m.ring);
  MonomialOrder ord = MonomialOrder::grevlex(2 * nc);

  std::size_t ngen = m.ideal.gens.size();
  MonomialOrder pord = MonomialOrder::grevlex(nc);
  std::vector<std::vector<Polynomial>> jac(ngen + 1, std::vector<Polynomial>(nc));
  for (std::size_t i = 0; i < ngen; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      jac[i][j] = lift_to_pu(derivative(m.ideal.gens[i], j, pord), nc, ord);
  for (std::size_t j = 0; j < nc; ++j)
    jac[ngen][j] = Polynomial::variable(2 * nc, nc + j);  // the row u

  Ideal out{ring, {}};
  for (const auto& g : m.ideal.gens) out.gens.push_back(lift_to_pu(g, nc, ord));

  PolyDet det(jac, ord, budget);
  // Rank condition: all (c+1)-minors of [Jac; u] vanish.
  {
    int nrows = static_cast<int>(ngen) + 1;
    int size = c + 1;
    if (size <= nrows && size <= static_cast<int>(nc))
      for (auto rm : masks_of_size(nrows, size))
        for (auto cm : masks_of_size(static_cast<int>(nc), size)) {
          Polynomial d = det.minor(rm, cm);
          if (!d.is_zero()) out.gens.push_back(std::move(d));
        }
  }
  // Singular locus: c-minors of the plain Jacobian; saturate by a seeded
  // random combination (generically equivalent to saturating by their ideal).
  std::vector<Polynomial> sing;
  if (c >= 1 && c <= static_cast<int>(ngen) && c <= static_cast<int>(nc))
    for (auto rm : masks_of_size(static_cast<int>(ngen), c))
      for (auto cm : masks_of_size(static_cast<int>(nc), c)) {
        Polynomial d = det.minor(rm, cm);
        if (!d.is_zero()) sing.push_back(std::move(d));
      }
  if (!sing.empty()) {
    SplitMix64 rng(seed);
    Polynomial combo;
    for (const auto& s : sing)
      combo = add(combo, mul_scalar(s, Rational(rng.nonzero_small_int())), ord);
    out = saturate(out, combo, budget);
  }
  return out;
}

namespace {

std::uint64_t derive_seed(std::uint64_t seed, int j, int attempt) {
  SplitMix64 mix(seed ^ (0x9e3779b9ull * static_cast<std::uint64_t>(j * 7 + attempt + 1)));
  return mix.next();
}

// One slicing attempt for a single j; throws GenericityFailure on a
// positive-dimensional result (bad draw).
long slice_once(const Ideal& conormal, std::size_t nc, int j, int n, std::uint64_t seed,
                Budget& budget) {
  SplitMix64 rng(seed);
  std::size_t arity = 2 * nc;
  MonomialOrder ord = MonomialOrder::grevlex(arity);
  std::vector<Polynomial> linear;
  auto random_form = [&](std::size_t offset, bool chart) {
    std::vector<Term> ts;
    for (std::size_t k = 0; k < nc; ++k) {
      Monomial m = Monomial::one(arity);
      m.e[offset + k] = 1;
      ts.push_back({std::move(m), Rational(rng.nonzero_small_int())});
    }
    if (chart) ts.push_back({Monomial::one(arity), Rational(-1)});
    return Polynomial::from_terms(std::move(ts), ord);
  };
  for (int k = 0; k < j - 1; ++k) linear.push_back(random_form(0, false));
  for (int k = 0; k < n - j; ++k) linear.push_back(random_form(nc, false));
  linear.push_back(random_form(0, true));
  linear.push_back(random_form(nc, true));

  Ring ring = conormal.ring;
  LinearReduction red = reduce_by_linear(ring, linear);
  if (!red.consistent) return 0;
  MonomialOrder rord = MonomialOrder::grevlex(red.reduced_ring.arity());
  Ideal sliced{red.reduced_ring, {}};
  for (const auto& g : conormal.gens) {
    Polynomial q = apply_linear_reduction(red, g, rord);
    if (!q.is_zero()) sliced.gens.push_back(std::move(q));
  }
  if (sliced.gens.empty()) throw GenericityFailure();
  GroebnerBasis gb = buchberger(sliced, rord, budget);
  try {
    return degree_zero_dim_from_gb(gb);
  } catch (const NotZeroDimensional&) {
    throw GenericityFailure();
  }
}

}  // namespace

MultiDegree polar_degrees_slicing(const ToricModel& m, std::uint64_t seed, Budget& budget) {
  Ideal conormal = conormal_ideal_toric(m, budget);
  std::size_t nc = m.ring.arity();
  int n = static_cast<int>(nc) - 1;
  MultiDegree md;
  md.ambient = static_cast<std::size_t>(n);
  int zeros_in_a_row = 0;
  for (int j = m.dim_projective + 1; j >= 1; --j) {
    long value = 0;
    bool settled = false;
    for (int attempt = 0; attempt < 2 && !settled; ++attempt) {
      try {
        long d1 = slice_once(conormal, nc, j, n, derive_seed(seed, j, 2 * attempt), budget);
        long d2 = slice_once(conormal, nc, j, n, derive_seed(seed, j, 2 * attempt + 1), budget);
        if (d1 == d2) {
          value = d1;
          settled = true;
        }
      } catch (const GenericityFailure&) {
        // fall through to the re-draw
      }
    }
    if (!settled) throw GenericityFailure();
    if (value != 0) {
      md.delta[j] = value;
      zeros_in_a_row = 0;
    } else if (++zeros_in_a_row >= 2) {
      break;  // below the support
    }
  }
  return md;
}

namespace {

using BiPoly = std::map<std::pair<int, int>, mpz_class>;  // (p-degree, u-degree)

void bp_add(BiPoly& a, const std::pair<int, int>& key, const mpz_class& v) {
  auto it = a.emplace(key, 0).first;
  it->second += v;
  if (it->second == 0) a.erase(it);
}

BiPoly bp_mul(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b)
      bp_add(r, {ka.first + kb.first, ka.second + kb.second}, va * vb);
  return r;
}

struct MonListHash {
  std::size_t operator()(const std::vector<Monomial>& v) const {
    std::size_t h = 14695981039346656037ull;
    for (const auto& m : v) h = (h ^ m.hash()) * 1099511628211ull;
    return h;
  }
};

// Bigraded Hilbert numerator of a monomial ideal over the p/u variable split.
class BigradedNumerator {
 public:
  BigradedNumerator(std::size_t arity, std::size_t n_pvars, Budget& budget)
      : arity_(arity), npv_(n_pvars), budget_(budget) {}

  BiPoly numerator(std::vector<Monomial> gens) {
    gens = minimal_monomial_generators(std::move(gens));
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.e < b.e; });
    auto it = memo_.find(gens);
    if (it != memo_.end()) return it->second;
    budget_.tick();
    BiPoly result = compute(gens);
    memo_.emplace(std::move(gens), result);
    return result;
  }

 private:
  std::pair<int, int> bidegree(const Monomial& m) const {
    int a = 0, b = 0;
    for (std::size_t i = 0; i < arity_; ++i)
      (i < npv_ ? a : b) += m.e[i];
    return {a, b};
  }

  BiPoly compute(const std::vector<Monomial>& gens) {
    BiPoly one{{{0, 0}, mpz_class(1)}};
    if (gens.empty()) return one;
    if (gens.size() == 1) {
      if (gens[0].is_one()) return {};
      BiPoly r = one;
      bp_add(r, bidegree(gens[0]), mpz_class(-1));
      return r;
    }
    // Coprime support blocks multiply.
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
          for (std::size_t c = 0; c < gens.size(); ++c)
            if (comp[c] == -1 && !coprime(gens[a], gens[c])) {
              comp[c] = ncomp;
              stack.push_back(c);
            }
        }
        ++ncomp;
      }
      if (ncomp > 1) {
        BiPoly prod = one;
        for (int c = 0; c < ncomp; ++c) {
          std::vector<Monomial> blk;
          for (std::size_t i = 0; i < gens.size(); ++i)
            if (comp[i] == c) blk.push_back(gens[i]);
          prod = bp_mul(prod, numerator(blk));
        }
        return prod;
      }
    }
    std::vector<std::size_t> freq(arity_, 0);
    for (const auto& m : gens)
      for (std::size_t i = 0; i < arity_; ++i)
        if (m.e[i] > 0) ++freq[i];
    std::size_t v = 0;
    for (std::size_t i = 1; i < arity_; ++i)
      if (freq[i] > freq[v]) v = i;
    std::vector<Monomial> plus, colon;
    Monomial mv = Monomial::one(arity_);
    mv.e[v] = 1;
    plus.push_back(mv);
    for (const auto& m : gens) {
      if (m.e[v] == 0) plus.push_back(m);
      Monomial q = m;
      if (q.e[v] > 0) q.e[v] -= 1;
      colon.push_back(q);
    }
    BiPoly a = numerator(plus);
    BiPoly b = numerator(colon);
    std::pair<int, int> shift = v < npv_ ? std::pair<int, int>{1, 0} : std::pair<int, int>{0, 1};
    BiPoly r = a;
    for (const auto& [k, val] : b) bp_add(r, {k.first + shift.first, k.second + shift.second}, val);
    return r;
  }

  std::size_t arity_, npv_;
  Budget& budget_;
  std::unordered_map<std::vector<Monomial>, BiPoly, MonListHash> memo_;
};

}  // namespace

MultiDegree polar_degrees_hilbert(const ToricModel& m, Budget& budget) {
  Ideal conormal = conormal_ideal_toric(m, budget);
  std::size_t nc = m.ring.arity();
  int n = static_cast<int>(nc) - 1;
  MonomialOrder ord = MonomialOrder::grevlex(2 * nc);
  GroebnerBasis gb = buchberger(conormal, ord, budget);
  BigradedNumerator bn(2 * nc, nc, budget);
  BiPoly K = bn.numerator(leading_monomials(gb));
  // Multidegree = lowest-degree part of K(1-s, 1-t), living in degree n+1.
  BiPoly C;
  for (const auto& [k, coef] : K) {
    // (1-s)^a (1-t)^b truncated to total degree n+1.
    for (int i = 0; i <= std::min(k.first, n + 1); ++i) {
      mpz_class bi;
      mpz_bin_uiui(bi.get_mpz_t(), k.first, i);
      for (int j = 0; i + j <= n + 1 && j <= k.second; ++j) {
        mpz_class bj;
        mpz_bin_uiui(bj.get_mpz_t(), k.second, j);
        mpz_class term = coef * bi * bj;
        if ((i + j) % 2 == 1) term = -term;
        bp_add(C, {i, j}, term);
      }
    }
  }
  MultiDegree md;
  md.ambient = static_cast<std::size_t>(n);
  for (const auto& [k, coef] : C) {
    if (k.first + k.second < n + 1) {
      if (coef != 0)
        throw std::logic_error("polar_degrees_hilbert: nonzero low-degree multidegree part");
      continue;
    }
    if (coef == 0) continue;
    // Coefficient of s^{n+1-j} t^j is delta_j.
    int j = k.second;
    md.delta[j] = static_cast<long>(coef.get_si());
  }
  return md;
}

std::optional<long> polar_bound_for_face(const MultiDegree& md, int dim_x, int face_codim) {
  int i = dim_x - (face_codim - 1);
  if (i < 0 || i > dim_x) return std::nullopt;
  return md.at(face_codim);
}

std::optional<MultiDegree> fixture_multidegree(const std::string& label) {
  static const std::map<std::string, MultiDegree> table = [] {
    std::map<std::string, MultiDegree> t;
    {
      MultiDegree md;
      md.ambient = 15;
      md.delta = {{2, 8}, {3, 56}, {4, 152}, {5, 344}, {6, 280}, {7, 136}, {8, 34}};
      t["path4_binary"] = md;
    }
    {
      MultiDegree md;
      md.ambient = 15;
      md.delta = {{1, 48}, {2, 192}, {3, 576}, {4, 1056}, {5, 1440},
                  {6, 1344}, {7, 864}, {8, 328}, {9, 64}};
      t["cycle4_binary"] = md;
    }
    {
      MultiDegree md;
      md.ambient = 7;
      md.delta = {{1, 4}, {2, 12}, {3, 36}, {4, 36}, {5, 36}, {6, 12}, {7, 4}};
      t["no3way(2,2,2)"] = md;
    }
    {
      MultiDegree md;
      md.ambient = 11;
      md.delta = {{2, 12}, {3, 56}, {4, 180}, {5, 288}, {6, 376},
                  {7, 288}, {8, 180}, {9, 56}, {10, 12}};
      t["no3way(2,2,3)"] = md;
    }
    return t;
  }();
  auto it = table.find(label);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

}  // namespace wdeg
