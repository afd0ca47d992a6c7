#pragma once

#include <string>
#include <vector>

#include "wdeg/groebner.hpp"

namespace wdeg {

/// Projective toric model: closure of the image of the scaled monomial map
/// p_j = scaling_j * theta^(column j of A). The row space of A must contain
/// the all-ones vector, which makes the ideal homogeneous.
struct ToricModel {
  std::string label;
  std::vector<std::vector<long>> A;  // d x n, integer
  std::vector<Rational> scaling;     // n positive multipliers
  Ring ring;                         // p0..p{n-1}
  Ideal ideal;
  int dim_projective = 0;            // rank(A) - 1
};

// Z-basis of {u : A u = 0} via column Hermite reduction.
std::vector<std::vector<mpz_class>> integer_kernel(const std::vector<std::vector<long>>& A);

bool row_space_contains_ones(const std::vector<std::vector<long>>& A);

// Lattice-binomial route: binomials from an integer kernel basis, scaled by
// substituting p_j -> p_j/scaling_j and clearing denominators, then saturated
// by the product of all variables.
Ideal toric_ideal_lattice(const std::vector<std::vector<long>>& A,
                          const std::vector<Rational>& scaling, Budget& budget);

// Implicitization route: eliminate the parameters (with an auxiliary inverse
// variable so the whole torus is covered) from p_j - scaling_j * theta^a_j.
Ideal toric_ideal_elimination(const std::vector<std::vector<long>>& A,
                              const std::vector<Rational>& scaling, Budget& budget);

ToricModel toric_model_from_matrix(const std::vector<std::vector<long>>& A,
                                   const std::vector<Rational>& scaling,
                                   const std::string& label, Budget& budget);

// Rational normal scroll S(n_1..n_d): ideal given directly by the 2-minors of
// the concatenated 2-row blocks [x_{j,0}..x_{j,n_j-1}; x_{j,1}..x_{j,n_j}].
ToricModel scroll(const std::vector<long>& ns);

// Hirzebruch surface S(a,b), a <= b: the two-block scroll with the standard
// 3-row matrix (1,i,0) for i<=a and (1,i,1) for i<=b.
ToricModel hirzebruch(long a, long b);

// Star-tree graphical model: hub with `hub_dim` states (slowest index),
// leaves with the given state counts; the ideal is the sum over hub slices of
// the complete-independence ideal in that slice's variables.
ToricModel star_tree(const std::vector<long>& leaf_dims, long hub_dim, Budget& budget);

// Binary path on four vertices: p_{ijkl} = a_{ij} b_{jk} c_{kl}.
ToricModel path4_binary(Budget& budget);

// Binary four-cycle: p_{ijkl} = a_{ij} b_{jk} c_{kl} d_{il}.
ToricModel cycle4_binary(Budget& budget);

// No-three-way interaction model: p_{ijk} = a_{ij} b_{jk} c_{ik}.
ToricModel no3way(long r, long s, long t, Budget& budget);

// Symbolic check that every ideal generator vanishes under the model's
// parametrization (requires a nonnegative exponent matrix).
bool parametrization_annihilates(const ToricModel& m);

}  // namespace wdeg
