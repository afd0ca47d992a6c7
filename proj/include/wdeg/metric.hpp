#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "wdeg/matrix.hpp"

namespace wdeg {

struct MetricError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotSymmetric : MetricError {
  NotSymmetric(std::size_t i, std::size_t j)
      : MetricError("metric: d[" + std::to_string(i) + "][" + std::to_string(j) +
                    "] != d[" + std::to_string(j) + "][" + std::to_string(i) + "]") {}
};
struct NonzeroDiagonal : MetricError {
  explicit NonzeroDiagonal(std::size_t i)
      : MetricError("metric: d[" + std::to_string(i) + "][" + std::to_string(i) + "] != 0") {}
};
struct NonPositiveOffDiagonal : MetricError {
  NonPositiveOffDiagonal(std::size_t i, std::size_t j)
      : MetricError("metric: d[" + std::to_string(i) + "][" + std::to_string(j) + "] <= 0") {}
};
struct TriangleViolation : MetricError {
  std::size_t i, j, k;
  TriangleViolation(std::size_t i_, std::size_t j_, std::size_t k_)
      : MetricError("metric: triangle inequality fails for (" + std::to_string(i_) + "," +
                    std::to_string(j_) + "," + std::to_string(k_) + ")"),
        i(i_), j(j_), k(k_) {}
};

/// A finite metric on the states {0, ..., n-1}: symmetric, zero diagonal,
/// positive off-diagonal, triangle inequality.
class FiniteMetric {
 public:
  // Checks all four axioms; throws the specific violation otherwise.
  static FiniteMetric validate(const RatMatrix& d);

  static FiniteMetric discrete(std::size_t n);

  // d(i, j) = |i - j|.
  static FiniteMetric l1(std::size_t n);

  // Product of factors with sizes dims; states are tuples enumerated
  // lexicographically with the last coordinate fastest, and the distance is
  // the number of coordinates that differ.
  static FiniteMetric hamming(const std::vector<std::size_t>& dims);

  std::size_t size() const { return d_.rows(); }
  const Rational& dist(std::size_t i, std::size_t j) const { return d_.at(i, j); }
  const RatMatrix& matrix() const { return d_; }
  const std::string& label() const { return label_; }

  // All coordinate permutations of the states preserving the metric, as maps
  // state -> state. Exhaustive search; intended for small n.
  std::vector<std::vector<std::size_t>> symmetry_group(std::size_t max_n = 8) const;

 private:
  FiniteMetric(RatMatrix d, std::string label) : d_(std::move(d)), label_(std::move(label)) {}
  RatMatrix d_;
  std::string label_;
};

}  // namespace wdeg
