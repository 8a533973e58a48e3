#pragma once

#include <optional>
#include <vector>

#include "crsym/scalar.hpp"

namespace crsym {

using Vec = std::vector<GaussianRational>;

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GaussianRational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  ExactMatrix transpose() const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix scaled(const GaussianRational& c) const;
  bool operator==(const ExactMatrix& o) const;
  bool is_zero() const;
  GaussianRational trace() const;

  void append_row(const Vec& row);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> a_;
};

// Reduced row echelon form computed in place; returns pivot columns.
std::vector<std::size_t> rref(ExactMatrix& m);

struct SolveResult {
  std::size_t rank = 0;
  bool consistent = true;
  std::optional<Vec> solution;   // a particular solution when consistent
  bool unique = false;
  std::vector<Vec> kernel;       // basis of the null space
};

SolveResult exact_rank_solve(const ExactMatrix& m, const std::optional<Vec>& b = std::nullopt);
std::size_t exact_rank(const ExactMatrix& m);
GaussianRational determinant(const ExactMatrix& m);

// Incremental row space for rank and membership tests on long sparse vectors.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}
  // Reduces v against the stored basis; returns true if v was independent (and stores it).
  bool insert(Vec v);
  bool contains(Vec v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  void reduce(Vec& v) const;
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace crsym
