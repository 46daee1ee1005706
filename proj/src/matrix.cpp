#include "arq/matrix.hpp"

#include "arq/errors.hpp"

namespace arq {

Mat Mat::operator*(const Mat& o) const {
  engine_check(cols_ == o.rows_, "matrix product shape");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (o.at(k, j) != 0) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  engine_check(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shape");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  engine_check(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shape");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (Rat& x : r.a_) x = -x;
  return r;
}

Mat Mat::scaled(const Rat& s) const {
  Mat r = *this;
  for (Rat& x : r.a_) x *= s;
  return r;
}

Mat Mat::transposed() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::without_row(int rr) const {
  Mat r(rows_ - 1, cols_);
  for (int i = 0, o = 0; i < rows_; ++i) {
    if (i == rr) continue;
    for (int j = 0; j < cols_; ++j) r.at(o, j) = at(i, j);
    ++o;
  }
  return r;
}

Mat Mat::without_col(int cc) const {
  Mat r(rows_, cols_ - 1);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0, o = 0; j < cols_; ++j) {
      if (j == cc) continue;
      r.at(i, o++) = at(i, j);
    }
  return r;
}

std::vector<Rat> Mat::col(int c) const {
  std::vector<Rat> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

std::vector<Rat> Mat::row(int r) const {
  std::vector<Rat> v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
  return v;
}

Mat Mat::rref(std::vector<int>* pivots) const {
  Mat m = *this;
  if (pivots) pivots->clear();
  int lead = 0;
  for (int c = 0; c < cols_ && lead < rows_; ++c) {
    int p = -1;
    for (int r = lead; r < rows_; ++r)
      if (m.at(r, c) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != lead)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(lead, j));
    Rat inv = 1 / m.at(lead, c);
    for (int j = 0; j < cols_; ++j) m.at(lead, j) *= inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == lead || m.at(r, c) == 0) continue;
      Rat f = m.at(r, c);
      for (int j = 0; j < cols_; ++j) m.at(r, j) -= f * m.at(lead, j);
    }
    if (pivots) pivots->push_back(c);
    ++lead;
  }
  return m;
}

int Mat::rank() const {
  std::vector<int> piv;
  rref(&piv);
  return int(piv.size());
}

Mat Mat::nullspace() const {
  std::vector<int> piv;
  Mat e = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(cols_, Rat(0));
    v[c] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -e.at(int(r), c);
    basis.push_back(std::move(v));
  }
  return from_columns(cols_, basis);
}

Mat Mat::column_space() const {
  std::vector<int> piv;
  rref(&piv);
  std::vector<std::vector<Rat>> basis;
  for (int c : piv) basis.push_back(col(c));
  return from_columns(rows_, basis);
}

bool Mat::solve(const std::vector<Rat>& b, std::vector<Rat>& x) const {
  engine_check(int(b.size()) == rows_, "solve rhs size");
  Mat aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<int> piv;
  Mat e = aug.rref(&piv);
  for (int c : piv)
    if (c == cols_) return false;
  x.assign(cols_, Rat(0));
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = e.at(int(r), cols_);
  return true;
}

Mat Mat::inverse() const {
  engine_check(rows_ == cols_, "inverse of non-square matrix");
  Mat aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  std::vector<int> piv;
  Mat e = aug.rref(&piv);
  engine_check(int(piv.size()) == rows_ && (piv.empty() || piv.back() == rows_ - 1),
               "inverse of singular matrix");
  Mat r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = e.at(i, cols_ + j);
  return r;
}

std::vector<Rat> Mat::apply(const std::vector<Rat>& v) const {
  engine_check(int(v.size()) == cols_, "apply size");
  std::vector<Rat> r(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

Mat Mat::from_columns(int rows, const std::vector<std::vector<Rat>>& cols) {
  Mat m(rows, int(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) {
    engine_check(int(cols[c].size()) == rows, "from_columns size");
    for (int r = 0; r < rows; ++r) m.at(r, int(c)) = cols[c][r];
  }
  return m;
}

bool in_span(const Mat& basis, const std::vector<Rat>& v, std::vector<Rat>* coords) {
  std::vector<Rat> x;
  if (!basis.solve(v, x)) return false;
  if (coords) *coords = x;
  return true;
}

} // namespace arq
