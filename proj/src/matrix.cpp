#include "crsym/matrix.hpp"

#include <stdexcept>

namespace crsym {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = GaussianRational(rows[i][j]);
  }
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
  ExactMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (!o(k, j).is_zero()) p(i, j) += a * o(k, j);
      }
    }
  return p;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
  ExactMatrix s = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
  return s;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const { return *this + o.scaled(GaussianRational(-1)); }

ExactMatrix ExactMatrix::scaled(const GaussianRational& c) const {
  ExactMatrix s = *this;
  for (auto& v : s.a_) v *= c;
  return s;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool ExactMatrix::is_zero() const {
  for (const auto& v : a_)
    if (!v.is_zero()) return false;
  return true;
}

GaussianRational ExactMatrix::trace() const {
  GaussianRational t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

void ExactMatrix::append_row(const Vec& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<std::size_t> rref(ExactMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    GaussianRational inv = GaussianRational(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      GaussianRational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

SolveResult exact_rank_solve(const ExactMatrix& m, const std::optional<Vec>& b) {
  if (b && b->size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  std::size_t n = m.cols();
  ExactMatrix aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    if (b) aug(i, n) = (*b)[i];
  }
  auto piv = rref(aug);
  SolveResult res;
  bool rhs_pivot = !piv.empty() && piv.back() == n;
  res.rank = piv.size() - (rhs_pivot ? 1 : 0);
  res.consistent = !rhs_pivot;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t k = 0; k < res.rank; ++k) is_pivot[piv[k]] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = GaussianRational(1);
    for (std::size_t k = 0; k < res.rank; ++k) v[piv[k]] = -aug(k, f);
    res.kernel.push_back(std::move(v));
  }
  if (b && res.consistent) {
    Vec x(n);
    for (std::size_t k = 0; k < res.rank; ++k) x[piv[k]] = aug(k, n);
    res.solution = std::move(x);
    res.unique = res.rank == n;
  }
  return res;
}

std::size_t exact_rank(const ExactMatrix& m) {
  ExactMatrix c = m;
  return rref(c).size();
}

GaussianRational determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  ExactMatrix a = m;
  std::size_t n = a.rows();
  GaussianRational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return GaussianRational();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    GaussianRational inv = GaussianRational(1) / a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      GaussianRational f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

void RowSpace::reduce(Vec& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const auto& c = v[pivots_[k]];
    if (c.is_zero()) continue;
    GaussianRational f = c;
    const Vec& row = rows_[k];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!row[j].is_zero()) v[j] -= f * row[j];
    }
  }
}

bool RowSpace::insert(Vec v) {
  if (v.size() != dim_) throw std::invalid_argument("vector length mismatch");
  reduce(v);
  std::size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  GaussianRational inv = GaussianRational(1) / v[p];
  for (auto& x : v) x *= inv;
  // keep stored rows fully reduced in the new pivot column
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    GaussianRational f = row[p];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!v[j].is_zero()) row[j] -= f * v[j];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RowSpace::contains(Vec v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector length mismatch");
  reduce(v);
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace crsym
