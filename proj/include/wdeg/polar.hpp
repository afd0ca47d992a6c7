#pragma once

#include <map>
#include <optional>
#include <string>

#include "wdeg/toric.hpp"

namespace wdeg {

struct GenericityFailure : std::runtime_error {
  GenericityFailure() : std::runtime_error("generic slices disagreed twice") {}
};
struct UnknownMultidegree : std::runtime_error {
  UnknownMultidegree() : std::runtime_error("no multidegree available for this model") {}
};

/// Conormal multidegree sum_j delta_j s^{n+1-j} t^j of a variety in P^n;
/// delta_j equals the polar degree mu_i with i = dim(X)+1-j.
struct MultiDegree {
  std::size_t ambient = 0;   // projective ambient dimension n
  std::map<int, long> delta; // nonzero entries only

  long at(int j) const {
    auto it = delta.find(j);
    return it == delta.end() ? 0 : it->second;
  }
  bool palindromic() const;
  friend bool operator==(const MultiDegree& a, const MultiDegree& b) {
    return a.ambient == b.ambient && a.delta == b.delta;
  }
};

std::string pretty(const MultiDegree& md);

// delta_{d-1} = delta_{d+1} = N, delta_d = 2(N-1) for S(n_1..n_d), d >= 2.
MultiDegree scroll_polar_degrees(const std::vector<long>& ns);

// (a+b, 2(a+b-1), a+b) at j = 1, 2, 3.
MultiDegree hirzebruch_polar_degrees(long a, long b);

// Convolution: delta_k(out) = sum_{i+j=k} delta_i(h1) delta_j(h2); the
// ambient dimensions add plus one (disjoint sets of coordinates).
MultiDegree multidegree_product(const MultiDegree& h1, const MultiDegree& h2);

// h^K under multidegree_product.
MultiDegree star_tree_multidegree(const MultiDegree& h, long K);

// Conormal ideal in Q[p, u] by the rank construction: I(X) plus the
// (c+1)-minors of the Jacobian of the generators stacked with the row u,
// c = codim(X), saturated against the singular locus (the c-minors of the
// plain Jacobian, via a seeded random combination).
Ideal conormal_ideal(const ToricModel& m, Budget& budget, std::uint64_t seed = 2024);

// Conormal ideal of a toric variety through torus tangency: I(X) plus the
// bilinear forms sum_j A_ij p_j u_j over a row basis of A, saturated by the
// product of the p variables. Agrees with conormal_ideal and is far cheaper.
Ideal conormal_ideal_toric(const ToricModel& m, Budget& budget);

// delta_j by cutting the conormal variety with j-1 random hyperplanes in p,
// n-j in u, and one random affine chart per group, then counting solutions.
// Each delta_j must agree across two seeds; one full re-draw is attempted
// before GenericityFailure.
MultiDegree polar_degrees_slicing(const ToricModel& m, std::uint64_t seed, Budget& budget);

// delta_j from the bigraded Hilbert numerator K(s,t) of the conormal ideal:
// the multidegree is the lowest-degree part of K(1-s, 1-t), concentrated in
// total degree codim = n+1. Deterministic, no random slices to draw.
MultiDegree polar_degrees_hilbert(const ToricModel& m, Budget& budget);

// Upper bound mu_i for a face of the given codimension, i = dim(X) - (codim-1);
// nullopt when i falls outside [0, dim(X)] and the bound does not apply.
std::optional<long> polar_bound_for_face(const MultiDegree& md, int dim_x, int face_codim);

// Reference multidegrees for the models whose conormal computation exceeds
// desk scale; keyed by model label. Returns nullopt for unknown labels.
std::optional<MultiDegree> fixture_multidegree(const std::string& label);

}  // namespace wdeg
