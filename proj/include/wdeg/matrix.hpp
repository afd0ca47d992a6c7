#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "wdeg/rational.hpp"

namespace wdeg {

using RatVec = std::vector<Rational>;

Rational dot(const RatVec& a, const RatVec& b);
bool is_zero_vec(const RatVec& v);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const RatVec& v, const Rational& c);

// Scales a rational vector to a primitive integer vector (gcd of entries 1),
// preserving direction. The zero vector is returned unchanged.
RatVec primitive_integer(const RatVec& v);

struct NonSquareError : std::invalid_argument {
  NonSquareError() : std::invalid_argument("matrix is not square") {}
};

/// Dense matrix of rationals, row-major.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
      throw std::invalid_argument("RatMatrix: entry count mismatch");
  }
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVec>& rows);
  static RatMatrix from_int_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  RatVec row(std::size_t i) const;
  RatVec col(std::size_t j) const;
  RatMatrix transpose() const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

RatVec mat_vec(const RatMatrix& m, const RatVec& v);

// Reduced row echelon form and the (strictly increasing) pivot column list.
std::pair<RatMatrix, std::vector<std::size_t>> rref(const RatMatrix& m);

// Basis of the right kernel {v : Mv = 0}; one vector per free column of the
// rref, in free-column order. Size is cols - rank.
std::vector<RatVec> kernel_basis(const RatMatrix& m);

// Exact determinant via Bareiss fraction-free elimination. Intermediate
// entries stay integral when the input is integral.
Rational det_bareiss(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

// Least-squares-free exact solve of the affine system M x = b; returns false
// when inconsistent. On success x holds one solution (free variables zero).
bool solve_affine(const RatMatrix& m, const RatVec& b, RatVec& x);

}  // namespace wdeg
