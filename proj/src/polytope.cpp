#include "wdeg/polytope.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace wdeg {

IndexSet IndexSet::intersect(const IndexSet& o) const {
  IndexSet r = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= o.words_[w];
  return r;
}

bool IndexSet::subset_of(const IndexSet& o) const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~o.words_[w]) return false;
  return true;
}

bool IndexSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

std::size_t IndexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

std::vector<std::size_t> IndexSet::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w)
    for (std::size_t b = 0; b < 64; ++b)
      if ((words_[w] >> b) & 1) out.push_back(w * 64 + b);
  return out;
}

std::size_t IndexSet::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto w : words_) h = (h ^ w) * 1099511628211ull;
  return h;
}

namespace {

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const { return s.hash(); }
};

bool lex_less(const RatVec& a, const RatVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

// Affine-hull data for a point set: base point, an rref row basis of the
// span of differences, its pivot columns, and a kernel basis (the equations).
struct AffineHull {
  RatVec base;
  std::vector<RatVec> basis;          // k rows, rref form
  std::vector<std::size_t> pivots;    // k pivot columns
  std::vector<RatVec> kernel;         // ambient-k independent normals
};

AffineHull affine_hull(const std::vector<RatVec>& pts) {
  AffineHull h;
  h.base = pts.at(0);
  std::vector<RatVec> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], h.base));
  if (diffs.empty()) diffs.emplace_back(h.base.size(), Rational(0));
  auto [r, piv] = rref(RatMatrix::from_rows(diffs));
  for (std::size_t i = 0; i < piv.size(); ++i) h.basis.push_back(r.row(i));
  h.pivots = piv;
  RatMatrix bm = h.basis.empty() ? RatMatrix(0, h.base.size())
                                 : RatMatrix::from_rows(h.basis);
  if (h.basis.empty()) {
    for (std::size_t j = 0; j < h.base.size(); ++j) {
      RatVec e(h.base.size());
      e[j] = 1;
      h.kernel.push_back(std::move(e));
    }
  } else {
    h.kernel = kernel_basis(bm);
  }
  return h;
}

// Coordinates of p - base in the rref basis: read off the pivot columns.
RatVec hull_coords(const AffineHull& h, const RatVec& p) {
  RatVec d = sub(p, h.base);
  RatVec c(h.pivots.size());
  for (std::size_t k = 0; k < h.pivots.size(); ++k) c[k] = d[h.pivots[k]];
  return c;
}

// Extreme rays of {y in R^{k+1} : rows . y >= 0} where rows are (1, c_i).
// Classic double description with the combinatorial adjacency test.
struct DDRay {
  RatVec v;
  IndexSet zero;  // constraints satisfied with equality (over all input rows)
};

std::vector<DDRay> double_description(const std::vector<RatVec>& rows, std::size_t dim) {
  // Initial simplicial cone from dim independent rows.
  std::vector<std::size_t> init;
  {
    std::vector<RatVec> picked;
    for (std::size_t i = 0; i < rows.size() && init.size() < dim; ++i) {
      picked.push_back(rows[i]);
      if (rank(RatMatrix::from_rows(picked)) == picked.size()) {
        init.push_back(i);
      } else {
        picked.pop_back();
      }
    }
  }
  if (init.size() < dim)
    throw std::logic_error("double_description: input not full-dimensional");

  RatMatrix m0(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m0.at(i, j) = rows[init[i]][j];
  // Columns of the inverse solve m0 * r_j = e_j.
  std::vector<DDRay> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    RatVec e(dim);
    e[j] = 1;
    RatVec r;
    if (!solve_affine(m0, e, r)) throw std::logic_error("double_description: bad init");
    DDRay ray;
    ray.v = primitive_integer(r);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> processed(rows.size(), false);
  for (auto i : init) processed[i] = true;
  auto recompute_zero = [&](DDRay& r) {
    r.zero = IndexSet(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (processed[i] && dot(rows[i], r.v).is_zero()) r.zero.insert(i);
  };
  for (auto& r : rays) recompute_zero(r);

  for (std::size_t c = 0; c < rows.size(); ++c) {
    if (processed[c]) continue;
    processed[c] = true;
    std::vector<int> side(rays.size());
    bool any_neg = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      side[i] = dot(rows[c], rays[i].v).sign();
      if (side[i] < 0) any_neg = true;
    }
    if (!any_neg) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (side[i] == 0) rays[i].zero.insert(c);
      continue;
    }
    std::vector<DDRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (side[i] >= 0) {
        if (side[i] == 0) rays[i].zero.insert(c);
        next.push_back(rays[i]);
      }
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (side[i] <= 0) continue;
      for (std::size_t j = 0; j < rays.size(); ++j) {
        if (side[j] >= 0) continue;
        // Adjacency: no third ray's zero set contains the common zero set.
        IndexSet common = rays[i].zero.intersect(rays[j].zero);
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == i || k == j) continue;
          if (common.subset_of(rays[k].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        Rational si = dot(rows[c], rays[i].v);
        Rational sj = dot(rows[c], rays[j].v);
        DDRay nr;
        nr.v = primitive_integer(sub(scale(rays[j].v, si), scale(rays[i].v, sj)));
        recompute_zero(nr);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }
  return rays;
}

// Project v onto the row space of hull.basis (canonical normal representative).
RatVec project_to_span(const AffineHull& h, const RatVec& v) {
  if (h.kernel.empty()) return v;
  RatMatrix k = RatMatrix::from_rows(h.kernel);
  // Solve (K K^T) c = K v, subtract K^T c.
  RatMatrix kkt(h.kernel.size(), h.kernel.size());
  for (std::size_t i = 0; i < h.kernel.size(); ++i)
    for (std::size_t j = 0; j < h.kernel.size(); ++j)
      kkt.at(i, j) = dot(h.kernel[i], h.kernel[j]);
  RatVec kv(h.kernel.size());
  for (std::size_t i = 0; i < h.kernel.size(); ++i) kv[i] = dot(h.kernel[i], v);
  RatVec c;
  if (!solve_affine(kkt, kv, c)) throw std::logic_error("project_to_span: Gram solve failed");
  RatVec out = v;
  for (std::size_t i = 0; i < h.kernel.size(); ++i)
    out = sub(out, scale(h.kernel[i], c[i]));
  return out;
}

}  // namespace

HPolytope vrep_to_hrep(const VPolytope& p) {
  if (p.vertices.empty()) throw std::invalid_argument("vrep_to_hrep: no vertices");
  HPolytope h;
  h.ambient = p.ambient;
  AffineHull hull = affine_hull(p.vertices);
  for (const auto& eta : hull.kernel) {
    RatVec n = eta;
    Rational rhs = dot(eta, hull.base);
    RatVec joint = n;
    joint.push_back(rhs);
    joint = primitive_integer(joint);
    rhs = joint.back();
    joint.pop_back();
    h.equalities.emplace_back(joint, rhs);
  }
  std::sort(h.equalities.begin(), h.equalities.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  std::size_t k = hull.pivots.size();
  if (k == 0) return h;  // a single point

  std::vector<RatVec> rows;
  rows.reserve(p.vertices.size());
  for (const auto& v : p.vertices) {
    RatVec c = hull_coords(hull, v);
    RatVec row(k + 1);
    row[0] = 1;
    for (std::size_t j = 0; j < k; ++j) row[j + 1] = c[j];
    rows.push_back(std::move(row));
  }
  auto rays = double_description(rows, k + 1);
  for (const auto& ray : rays) {
    // Ray (b, y): b + y.c >= 0 on the hull, i.e. (-y).c <= b.
    RatVec g(k);
    for (std::size_t j = 0; j < k; ++j) g[j] = -ray.v[j + 1];
    Rational b = ray.v[0];
    // Pull the coordinate normal back to ambient space: solve basis . a = g.
    RatMatrix bm = RatMatrix::from_rows(hull.basis);
    RatVec a;
    if (!solve_affine(bm, g, a)) throw std::logic_error("vrep_to_hrep: pullback failed");
    a = project_to_span(hull, a);
    Rational rhs = b + dot(a, hull.base);
    RatVec joint = a;
    joint.push_back(rhs);
    joint = primitive_integer(joint);
    rhs = joint.back();
    joint.pop_back();
    h.inequalities.emplace_back(std::move(joint), rhs);
  }
  std::sort(h.inequalities.begin(), h.inequalities.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  return h;
}

VPolytope make_vpolytope(std::size_t ambient, std::vector<RatVec> points) {
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) throw std::invalid_argument("make_vpolytope: no points");
  VPolytope all{ambient, points};
  HPolytope h = vrep_to_hrep(all);
  VPolytope out;
  out.ambient = ambient;
  if (h.inequalities.empty()) {  // single point
    out.vertices.push_back(points[0]);
    return out;
  }
  // A point is a vertex iff its tight constraints span the whole ambient
  // space (affine-hull equalities count as always tight).
  for (const auto& pt : points) {
    std::vector<RatVec> tight;
    for (const auto& [n, b] : h.inequalities)
      if (dot(n, pt) == b) tight.push_back(n);
    for (const auto& [n, b] : h.equalities) tight.push_back(n);
    if (rank(RatMatrix::from_rows(tight)) == ambient) out.vertices.push_back(pt);
  }
  std::sort(out.vertices.begin(), out.vertices.end(), lex_less);
  return out;
}

VPolytope wasserstein_ball(const FiniteMetric& m) {
  std::size_t n = m.size();
  std::vector<RatVec> pts;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      RatVec v(n);
      Rational inv = m.dist(i, j).inv();
      v[i] = inv;
      v[j] = -inv;
      pts.push_back(std::move(v));
    }
  return make_vpolytope(n, std::move(pts));
}

HPolytope lipschitz_polytope(const FiniteMetric& m) {
  std::size_t n = m.size();
  VPolytope ball = wasserstein_ball(m);
  auto is_vertex = [&](const RatVec& v) {
    for (const auto& w : ball.vertices)
      if (w == v) return true;
    return false;
  };
  HPolytope h;
  h.ambient = n;
  h.equalities.emplace_back(RatVec(n, Rational(1)), Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      RatVec v(n);
      Rational inv = m.dist(i, j).inv();
      v[i] = inv;
      v[j] = -inv;
      if (!is_vertex(v)) continue;
      RatVec normal(n);
      normal[i] = 1;
      normal[j] = -1;
      RatVec joint = normal;
      joint.push_back(m.dist(i, j));
      joint = primitive_integer(joint);
      Rational rhs = joint.back();
      joint.pop_back();
      h.inequalities.emplace_back(std::move(joint), rhs);
    }
  std::sort(h.inequalities.begin(), h.inequalities.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  return h;
}

VPolytope polar_dual(const VPolytope& p) {
  HPolytope h = vrep_to_hrep(p);
  std::vector<RatVec> pts;
  for (const auto& [n, b] : h.inequalities) {
    if (b.sign() <= 0)
      throw std::invalid_argument("polar_dual: origin not interior");
    pts.push_back(scale(n, b.inv()));
  }
  return make_vpolytope(p.ambient, std::move(pts));
}

VPolytope hrep_to_vrep(const HPolytope& h) {
  std::vector<RatVec> pts;
  for (const auto& [n, b] : h.inequalities) {
    if (b.sign() <= 0)
      throw std::invalid_argument("hrep_to_vrep: origin must be relative-interior");
    pts.push_back(scale(n, b.inv()));
  }
  VPolytope dual = make_vpolytope(h.ambient, std::move(pts));
  return polar_dual(dual);
}

FaceLattice FaceLattice::build(const VPolytope& p) {
  FaceLattice lat;
  lat.poly_ = p;
  lat.hrep_ = vrep_to_hrep(p);
  std::size_t nv = p.vertices.size();
  std::size_t nf = lat.hrep_.inequalities.size();

  std::vector<IndexSet> facet_sets;
  facet_sets.reserve(nf);
  for (const auto& [n, b] : lat.hrep_.inequalities) {
    IndexSet s(nv);
    for (std::size_t v = 0; v < nv; ++v)
      if (dot(n, p.vertices[v]) == b) s.insert(v);
    facet_sets.push_back(std::move(s));
  }

  // Every proper face is an intersection of facet vertex sets; close under
  // pairwise intersection starting from the facets themselves.
  std::unordered_set<IndexSet, IndexSetHash> seen;
  std::queue<IndexSet> work;
  for (const auto& s : facet_sets)
    if (!s.empty() && seen.insert(s).second) work.push(s);
  while (!work.empty()) {
    IndexSet s = work.front();
    work.pop();
    for (const auto& t : facet_sets) {
      IndexSet u = s.intersect(t);
      if (u.empty() || u == s) continue;
      if (seen.insert(u).second) work.push(u);
    }
  }

  // Faces of the ball never contain the origin, so a face of dimension d has
  // a linear span of dimension d+1.
  std::vector<std::pair<std::size_t, IndexSet>> dim_and_set;
  for (const auto& s : seen) {
    auto idx = s.elements();
    std::vector<RatVec> span;
    for (auto i : idx) span.push_back(p.vertices[i]);
    std::size_t spandim = rank(RatMatrix::from_rows(span));
    if (spandim == 0) throw std::logic_error("face_lattice: face spanning nothing");
    dim_and_set.emplace_back(spandim - 1, s);
  }
  std::size_t poly_dim = affine_hull(p.vertices).pivots.size();

  lat.faces_by_dim_.assign(poly_dim, {});
  for (auto& [d, s] : dim_and_set) {
    if (d >= poly_dim) continue;  // the whole polytope is not a proper face
    Face f;
    f.vertex_indices = s.elements();
    f.dim = d;
    lat.faces_by_dim_[d].push_back(std::move(f));
  }
  for (auto& level : lat.faces_by_dim_)
    std::sort(level.begin(), level.end(), [](const Face& a, const Face& b) {
      return a.vertex_indices < b.vertex_indices;
    });

  // Per-face data: spans, containing facets, functionals, parents.
  std::vector<RatVec> primitive_normals;
  for (const auto& [n, b] : lat.hrep_.inequalities)
    primitive_normals.push_back(primitive_integer(n));

  for (std::size_t d = 0; d < lat.faces_by_dim_.size(); ++d) {
    for (auto& f : lat.faces_by_dim_[d]) {
      // Greedy vertex subset spanning the face's linear span.
      std::vector<RatVec> span;
      for (auto i : f.vertex_indices) {
        span.push_back(p.vertices[i]);
        if (rank(RatMatrix::from_rows(span)) != span.size()) span.pop_back();
      }
      if (span.size() != f.dim + 1)
        throw std::logic_error("face_lattice: span dimension mismatch");
      f.span_basis = std::move(span);
      IndexSet fs(nv);
      for (auto i : f.vertex_indices) fs.insert(i);
      for (std::size_t k = 0; k < nf; ++k)
        if (fs.subset_of(facet_sets[k])) f.facets.push_back(k);
      RatVec sum(p.ambient, Rational(0));
      for (auto k : f.facets) sum = add(sum, primitive_normals[k]);
      f.functional = primitive_integer(sum);
      // The functional must peak exactly on the face.
      Rational best;
      bool first = true;
      for (std::size_t v = 0; v < nv; ++v) {
        Rational val = dot(f.functional, p.vertices[v]);
        if (first || val > best) best = val, first = false;
      }
      for (std::size_t v = 0; v < nv; ++v) {
        bool on_face = fs.contains(v);
        if ((dot(f.functional, p.vertices[v]) == best) != on_face)
          throw std::logic_error("face_lattice: functional not supported exactly on face");
      }
    }
  }
  for (std::size_t d = 0; d + 1 < lat.faces_by_dim_.size(); ++d) {
    for (auto& f : lat.faces_by_dim_[d]) {
      IndexSet fs(nv);
      for (auto i : f.vertex_indices) fs.insert(i);
      for (std::size_t pi = 0; pi < lat.faces_by_dim_[d + 1].size(); ++pi) {
        const auto& g = lat.faces_by_dim_[d + 1][pi];
        IndexSet gs(nv);
        for (auto i : g.vertex_indices) gs.insert(i);
        if (fs.subset_of(gs)) f.parents.push_back(pi);
      }
    }
  }
  return lat;
}

std::vector<std::size_t> FaceLattice::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& level : faces_by_dim_) f.push_back(level.size());
  return f;
}

std::size_t FaceLattice::face_count() const {
  std::size_t c = 0;
  for (const auto& level : faces_by_dim_) c += level.size();
  return c;
}

const Face& FaceLattice::face_at(std::size_t flat) const {
  for (const auto& level : faces_by_dim_) {
    if (flat < level.size()) return level[flat];
    flat -= level.size();
  }
  throw std::out_of_range("face_at");
}

std::size_t FaceLattice::flat_index(std::size_t d, std::size_t i) const {
  std::size_t base = 0;
  for (std::size_t k = 0; k < d; ++k) base += faces_by_dim_[k].size();
  return base + i;
}

RatVec FaceLattice::functional_for(const Face& f) const { return f.functional; }

RatVec FaceLattice::perturbed_functional(const Face& f, std::uint64_t seed) const {
  SplitMix64 rng(seed);
  RatVec sum(poly_.ambient, Rational(0));
  for (auto k : f.facets) {
    RatVec n = primitive_integer(hrep_.inequalities[k].first);
    Rational w = Rational(1) + Rational(rng.positive_int(10), rng.positive_int(10));
    sum = add(sum, scale(n, w));
  }
  return primitive_integer(sum);
}

FaceLattice face_lattice(const VPolytope& p) { return FaceLattice::build(p); }

std::vector<RatVec> face_span(const Face& f) { return f.span_basis; }

}  // namespace wdeg
