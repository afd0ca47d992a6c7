#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wdeg/matrix.hpp"
#include "wdeg/metric.hpp"
#include "wdeg/rng.hpp"

namespace wdeg {

/// Set of vertex indices as a packed bitset (polytopes here stay small).
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}
  void insert(std::size_t i) { words_[i >> 6] |= (1ull << (i & 63)); }
  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  IndexSet intersect(const IndexSet& o) const;
  bool subset_of(const IndexSet& o) const;
  bool empty() const;
  std::size_t count() const;
  std::vector<std::size_t> elements() const;
  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.words_ == b.words_; }
  friend bool operator<(const IndexSet& a, const IndexSet& b) { return a.words_ < b.words_; }
  std::size_t hash() const;

 private:
  std::vector<std::uint64_t> words_;
};

/// Irredundant vertex representation; every vertex has coordinate sum zero.
struct VPolytope {
  std::size_t ambient = 0;
  std::vector<RatVec> vertices;
};

/// Half-space representation: equalities cut the affine hull, inequalities
/// (normal, rhs) with normal . x <= rhs are facet-defining and irredundant.
struct HPolytope {
  std::size_t ambient = 0;
  std::vector<std::pair<RatVec, Rational>> equalities;
  std::vector<std::pair<RatVec, Rational>> inequalities;
};

struct Face {
  std::vector<std::size_t> vertex_indices;  // sorted
  std::size_t dim = 0;
  std::vector<RatVec> span_basis;  // dim+1 vertices spanning the face's linear span
  RatVec functional;               // maximized over the ball exactly on this face
  std::vector<std::size_t> facets; // indices of facets containing this face
  std::vector<std::size_t> parents;  // indices into the (dim+1)-list of the lattice
};

class FaceLattice {
 public:
  static FaceLattice build(const VPolytope& p);

  std::size_t dim() const { return faces_by_dim_.size(); }  // dim of the polytope
  const VPolytope& polytope() const { return poly_; }
  const HPolytope& hrep() const { return hrep_; }
  const std::vector<Face>& faces(std::size_t d) const { return faces_by_dim_.at(d); }
  std::vector<std::size_t> f_vector() const;
  std::size_t face_count() const;
  const Face& face_at(std::size_t flat_index) const;  // dim-major flat order
  std::size_t flat_index(std::size_t d, std::size_t i) const;

  // Sum of the primitive outer facet normals over all facets containing f;
  // lies in the relative interior of the normal cone, so it is maximized over
  // the ball exactly on f.
  RatVec functional_for(const Face& f) const;

  // Seeded re-draw inside the same normal cone: sum plus a random positive
  // rational combination of the facet normals.
  RatVec perturbed_functional(const Face& f, std::uint64_t seed) const;

 private:
  VPolytope poly_;
  HPolytope hrep_;
  std::vector<std::vector<Face>> faces_by_dim_;
};

// Hull-irredundant vertices of conv{(e_i - e_j)/d_ij : i != j}, sorted
// lexicographically. The ball lives in the hyperplane of coordinate sum zero.
VPolytope wasserstein_ball(const FiniteMetric& m);

// {|x_i - x_j| <= d_ij} within the sum-zero hyperplane, with redundant
// inequalities removed (an inequality is facet-defining iff the matching
// scaled difference vector is a vertex of the ball).
HPolytope lipschitz_polytope(const FiniteMetric& m);

// Facet enumeration by the double description method, inserting the points in
// their stored (lexicographic) order. Works inside the affine hull and
// returns its equations alongside the facets.
HPolytope vrep_to_hrep(const VPolytope& p);

// Vertex enumeration for an H-polytope containing the origin in its relative
// interior (all rhs > 0), via polarity.
VPolytope hrep_to_vrep(const HPolytope& h);

// Convex hull of arbitrary sum-zero points: keeps only true vertices.
VPolytope make_vpolytope(std::size_t ambient, std::vector<RatVec> points);

// Polar dual within the sum-zero hyperplane (origin must be interior).
VPolytope polar_dual(const VPolytope& p);

FaceLattice face_lattice(const VPolytope& p);

std::vector<RatVec> face_span(const Face& f);

}  // namespace wdeg
