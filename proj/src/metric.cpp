#include "wdeg/metric.hpp"

#include <algorithm>
#include <numeric>

namespace wdeg {

FiniteMetric FiniteMetric::validate(const RatMatrix& d) {
  if (d.rows() != d.cols()) throw MetricError("metric: matrix not square");
  std::size_t n = d.rows();
  if (n < 2) throw MetricError("metric: need at least two states");
  for (std::size_t i = 0; i < n; ++i)
    if (!d.at(i, i).is_zero()) throw NonzeroDiagonal(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d.at(i, j) != d.at(j, i)) throw NotSymmetric(i, j);
      if (d.at(i, j).sign() <= 0) throw NonPositiveOffDiagonal(i, j);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && j != k && i != k && d.at(i, k) > d.at(i, j) + d.at(j, k))
          throw TriangleViolation(i, j, k);
  return FiniteMetric(d, "explicit(" + std::to_string(n) + ")");
}

FiniteMetric FiniteMetric::discrete(std::size_t n) {
  if (n < 2) throw MetricError("discrete metric: n >= 2 required");
  RatMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d.at(i, j) = (i == j) ? 0 : 1;
  return FiniteMetric(std::move(d), "discrete(" + std::to_string(n) + ")");
}

FiniteMetric FiniteMetric::l1(std::size_t n) {
  if (n < 2) throw MetricError("l1 metric: n >= 2 required");
  RatMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d.at(i, j) = static_cast<long>(i > j ? i - j : j - i);
  return FiniteMetric(std::move(d), "l1(" + std::to_string(n) + ")");
}

FiniteMetric FiniteMetric::hamming(const std::vector<std::size_t>& dims) {
  if (dims.empty()) throw MetricError("hamming metric: empty factor list");
  std::size_t n = 1;
  for (auto d : dims) {
    if (d < 2) throw MetricError("hamming metric: each factor needs >= 2 states");
    n *= d;
  }
  if (n < 2) throw MetricError("hamming metric: n >= 2 required");
  auto unrank = [&](std::size_t s) {
    std::vector<std::size_t> t(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
      t[k] = s % dims[k];
      s /= dims[k];
    }
    return t;
  };
  RatMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto ti = unrank(i);
    for (std::size_t j = 0; j < n; ++j) {
      auto tj = unrank(j);
      long diff = 0;
      for (std::size_t k = 0; k < dims.size(); ++k) diff += (ti[k] != tj[k]) ? 1 : 0;
      d.at(i, j) = diff;
    }
  }
  std::string label = "hamming(";
  for (std::size_t k = 0; k < dims.size(); ++k)
    label += (k ? "," : "") + std::to_string(dims[k]);
  label += ")";
  return FiniteMetric(std::move(d), std::move(label));
}

std::vector<std::vector<std::size_t>> FiniteMetric::symmetry_group(std::size_t max_n) const {
  std::vector<std::vector<std::size_t>> out;
  std::size_t n = size();
  if (n > max_n) return out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if (d_.at(perm[i], perm[j]) != d_.at(i, j)) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace wdeg
