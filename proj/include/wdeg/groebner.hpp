#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wdeg/polynomial.hpp"

namespace wdeg {

struct TimeoutError : std::runtime_error {
  TimeoutError() : std::runtime_error("computation budget exceeded") {}
};
struct NotZeroDimensional : std::runtime_error {
  NotZeroDimensional() : std::runtime_error("ideal is not zero-dimensional") {}
};
struct NotHomogeneous : std::runtime_error {
  NotHomogeneous() : std::runtime_error("ideal is not homogeneous") {}
};

/// Step-count and wall-clock cap shared by one computation. Checked inside
/// reduction loops; overruns surface as TimeoutError instead of hanging.
class Budget {
 public:
  Budget() = default;
  Budget(std::uint64_t max_steps, std::chrono::milliseconds wall)
      : max_steps_(max_steps),
        deadline_(std::chrono::steady_clock::now() + wall) {}
  static Budget unlimited() { return Budget(); }

  void tick(std::uint64_t n = 1) {
    steps_ += n;
    if (max_steps_ && steps_ > max_steps_) throw TimeoutError();
    if (deadline_ && (steps_ & 0x3ff) == 0 &&
        std::chrono::steady_clock::now() > *deadline_)
      throw TimeoutError();
  }
  std::uint64_t steps() const { return steps_; }

 private:
  std::uint64_t steps_ = 0;
  std::uint64_t max_steps_ = 0;  // 0 = no cap
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

struct Ideal {
  Ring ring;
  std::vector<Polynomial> gens;  // nonzero
};

struct GroebnerBasis {
  Ring ring;
  MonomialOrder order;
  std::vector<Polynomial> basis;  // reduced, monic, ascending leading terms
};

// Remainder of f on division by the basis polynomials (full reduction,
// first divisor in list order wins).
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& ord, Budget& budget);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb, Budget& budget);

// Buchberger with the Gebauer-Moller pair criteria and normal selection.
// Output is the reduced basis, deterministic for fixed input.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord, Budget& budget);

bool contains_one(const GroebnerBasis& gb);

// I with `remove` eliminated via a block order; generators of the returned
// ideal involve only the remaining variables (ring unchanged).
Ideal eliminate(const Ideal& ideal, const std::vector<std::size_t>& remove, Budget& budget);

// I : f^infinity via the auxiliary variable trick (adjoin 1 - t*f, eliminate t).
Ideal saturate(const Ideal& ideal, const Polynomial& f, Budget& budget);

// I : x_var^infinity for homogeneous I: a grevlex basis with x_var least
// significant, with each element divided by its maximal x_var power.
Ideal saturate_by_variable(const Ideal& ideal, std::size_t var, Budget& budget);

// I : (product of the given variables)^infinity, variable by variable.
Ideal saturate_by_variables(const Ideal& ideal, const std::vector<std::size_t>& vars,
                            Budget& budget);

// Krull dimension of the affine quotient ring, via the maximal independent
// variable set of the leading-term ideal; -1 for the improper ideal.
int dimension(const Ideal& ideal, Budget& budget);
int dimension_from_gb(const GroebnerBasis& gb);

// Number of standard monomials (= vector-space dimension of the quotient).
// Returns 0 for the improper ideal; throws NotZeroDimensional if dim > 0.
int degree_zero_dim(const Ideal& ideal, Budget& budget);
int degree_zero_dim_from_gb(const GroebnerBasis& gb);

// Degree of the projective variety of a homogeneous ideal via the Hilbert
// series numerator of the leading-term ideal.
int homogeneous_degree(const Ideal& ideal, Budget& budget);

// Numerator of the Hilbert series of a monomial ideal, as dense coefficients.
std::vector<mpz_class> hilbert_numerator(const std::vector<Monomial>& lt_gens,
                                         std::size_t arity, Budget& budget);

std::vector<Monomial> minimal_monomial_generators(std::vector<Monomial> gens);
std::vector<Monomial> leading_monomials(const GroebnerBasis& gb);

/// Gaussian elimination of affine-linear constraints from a polynomial
/// system: pivot variables become affine expressions in the free ones, and
/// generators are rewritten in the restricted ring.
struct LinearReduction {
  bool consistent = true;
  Ring reduced_ring;
  std::vector<std::size_t> free_vars;     // original indices of kept variables
  std::vector<Polynomial> substitution;   // original var -> poly in reduced ring
};

LinearReduction reduce_by_linear(const Ring& ring, const std::vector<Polynomial>& linear);
Polynomial apply_linear_reduction(const LinearReduction& red, const Polynomial& p,
                                  const MonomialOrder& reduced_ord);

}  // namespace wdeg
