#include "wdeg/matrix.hpp"

#include <numeric>

namespace wdeg {

Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero_vec(const RatVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

RatVec scale(const RatVec& v, const Rational& c) {
  RatVec r(v);
  for (auto& x : r) x *= c;
  return r;
}

RatVec primitive_integer(const RatVec& v) {
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), x.den().get_mpz_t());
    den_lcm = l;
  }
  if (den_lcm == 0) return v;
  RatVec r(v);
  for (auto& x : r) x *= Rational(den_lcm);
  for (const auto& x : r) {
    if (x.is_zero()) continue;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), x.num().get_mpz_t());
    num_gcd = g;
  }
  if (num_gcd == 0) return r;  // zero vector
  for (auto& x : r) x /= Rational(num_gcd);
  return r;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return RatMatrix(0, 0);
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_int_rows(const std::vector<std::vector<long>>& rows) {
  std::vector<RatVec> rs;
  rs.reserve(rows.size());
  for (const auto& r : rows) rs.emplace_back(r.begin(), r.end());
  return from_rows(rs);
}

RatVec RatMatrix::row(std::size_t i) const {
  RatVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

RatVec RatMatrix::col(std::size_t j) const {
  RatVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatVec mat_vec(const RatMatrix& m, const RatVec& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("mat_vec: size mismatch");
  RatVec r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational s;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m.at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

std::pair<RatMatrix, std::vector<std::size_t>> rref(const RatMatrix& m) {
  RatMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a.at(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    Rational inv = a.at(r, c).inv();
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Rational f = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {a, pivots};
}

std::vector<RatVec> kernel_basis(const RatMatrix& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational det_bareiss(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw NonSquareError();
  std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  RatMatrix a = m;
  Rational prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k).is_zero()) ++p;
      if (p == n) return Rational(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  Rational d = a.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

std::size_t rank(const RatMatrix& m) { return rref(m).second.size(); }

bool solve_affine(const RatMatrix& m, const RatVec& b, RatVec& x) {
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  auto [r, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return false;
  x.assign(m.cols(), Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = r.at(k, m.cols());
  return true;
}

}  // namespace wdeg
