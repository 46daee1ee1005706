#ifndef ARQ_MATRIX_HPP
#define ARQ_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "arq/rational.hpp"

namespace arq {

// Dense matrix over the rationals. Everything here is desk scale, so plain
// Gaussian elimination with exact arithmetic is used throughout.
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rat(0)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  bool is_zero() const {
    for (const Rat& x : a_)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const Rat& s) const;
  Mat transposed() const;

  Mat without_row(int r) const;
  Mat without_col(int c) const;

  std::vector<Rat> col(int c) const;
  std::vector<Rat> row(int r) const;

  // Row echelon machinery.
  int rank() const;
  // Basis of the right null space, as columns of the returned matrix.
  Mat nullspace() const;
  // Column space basis (subset of columns reduced to echelon combinations).
  Mat column_space() const;
  // Solve A x = b; returns false if inconsistent.
  bool solve(const std::vector<Rat>& b, std::vector<Rat>& x) const;
  // Inverse; requires square full rank (engine_check otherwise).
  Mat inverse() const;

  // Reduced row echelon form; pivot column indices returned via `pivots`.
  Mat rref(std::vector<int>* pivots = nullptr) const;

  std::vector<Rat> apply(const std::vector<Rat>& v) const;

  static Mat from_columns(int rows, const std::vector<std::vector<Rat>>& cols);

private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

// Coordinates of v in the column span of B (columns independent); false if outside.
bool in_span(const Mat& basis, const std::vector<Rat>& v, std::vector<Rat>* coords = nullptr);

} // namespace arq

#endif
