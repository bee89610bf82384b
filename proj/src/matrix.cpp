#include "folcoh/matrix.hpp"

#include <algorithm>

#include "folcoh/errors.hpp"

namespace folcoh {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error("from_columns: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("from_rows: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void Matrix::set_col(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw Error("set_col: length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error("matrix product: inner dimension mismatch");
  Matrix m(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) m(i, j) += aik * rhs(k, j);
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix sum: shape mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + rhs.a_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix difference: shape mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - rhs.a_[i];
  return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = c * a_[i];
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw Error("apply: length mismatch");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

// Multiplies each row by the lcm of its denominators so Bareiss runs on integers.
static void clear_denominators(Matrix& m, std::vector<Scalar>* factors = nullptr) {
  using boost::multiprecision::denominator;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, denominator(m(i, j)));
    if (factors) factors->push_back(Scalar(l));
    if (l == 1) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= Scalar(l);
  }
}

// Fraction-free elimination; returns the row rank, and if det/sign are given
// (square input) leaves the determinant of the cleared matrix in *det.
static std::size_t bareiss(Matrix& m, Scalar* det = nullptr) {
  std::size_t r = 0;
  int sign = 1;
  Scalar prev = 1;
  Scalar last_pivot = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && m(pr, c) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j)
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    last_pivot = prev;
    ++r;
  }
  if (det) *det = (r == m.rows() && m.rows() == m.cols()) ? Scalar(sign) * last_pivot : Scalar(0);
  return r;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  clear_denominators(m);
  return bareiss(m);
}

Scalar Matrix::determinant() const {
  if (rows_ != cols_) throw Error("determinant: matrix not square");
  if (rows_ == 0) return 1;
  Matrix m = *this;
  std::vector<Scalar> factors;
  clear_denominators(m, &factors);
  Scalar det;
  bareiss(m, &det);
  for (const auto& f : factors) det /= f;
  return det;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
  Matrix m = *this;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t pr = r;
    while (pr < rows_ && m(pr, c) == 0) ++pr;
    if (pr == rows_) continue;
    if (pr != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m(pr, j), m(r, j));
    const Scalar inv = Scalar(1) / m(r, c);
    for (std::size_t j = c; j < cols_; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

std::vector<Vec> Matrix::kernel_basis() const {
  std::vector<std::size_t> pivots;
  const Matrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols_);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
  if (b.size() != rows_) throw Error("solve: rhs length mismatch");
  Matrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  std::vector<std::size_t> pivots;
  const Matrix r = aug.rref(&pivots);
  for (auto p : pivots)
    if (p == cols_) return std::nullopt;
  Vec x(cols_);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = r(k, cols_);
  return x;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Matrix aug = hstack(*this, identity(rows_));
  std::vector<std::size_t> pivots;
  const Matrix r = aug.rref(&pivots);
  if (pivots.size() != rows_) return std::nullopt;
  for (std::size_t k = 0; k < rows_; ++k)
    if (pivots[k] != k) return std::nullopt;
  Matrix inv(rows_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < rows_; ++j) inv(i, j) = r(i, cols_ + j);
  return inv;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error("hstack: row count mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error("vstack: column count mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

std::vector<Vec> echelon_basis(std::size_t dim, const std::vector<Vec>& vectors) {
  if (vectors.empty()) return {};
  const Matrix r = Matrix::from_rows(dim, vectors).rref();
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    Vec v = r.row(i);
    if (!vec_is_zero(v)) basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> express_in_span(std::size_t dim, const std::vector<Vec>& basis, const Vec& v) {
  if (basis.empty()) return vec_is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
  return Matrix::from_columns(dim, basis).solve(v);
}

QuotientSpace make_quotient(std::size_t ambient, const std::vector<Vec>& relations) {
  QuotientSpace q;
  q.ambient = ambient;
  std::vector<std::size_t> piv;
  Matrix r = relations.empty() ? Matrix(0, ambient)
                               : Matrix::from_rows(ambient, relations).rref(&piv);
  // keep only the pivot rows; the rest are zero
  std::vector<Vec> kept;
  for (std::size_t i = 0; i < piv.size(); ++i) kept.push_back(r.row(i));
  q.relations_rref = Matrix::from_rows(ambient, kept);
  q.pivots = piv;
  std::size_t next = 0;
  for (std::size_t j = 0; j < ambient; ++j) {
    if (next < piv.size() && piv[next] == j) {
      ++next;
      continue;
    }
    q.free_coords.push_back(j);
  }
  return q;
}

Vec QuotientSpace::reduce(const Vec& v) const {
  if (v.size() != ambient) throw Error("quotient reduce: dimension mismatch");
  Vec out = v;
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const Scalar c = out[pivots[k]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient; ++j) out[j] -= c * relations_rref(k, j);
  }
  return out;
}

Vec QuotientSpace::coords(const Vec& v) const {
  const Vec red = reduce(v);
  Vec out(free_coords.size());
  for (std::size_t i = 0; i < free_coords.size(); ++i) out[i] = red[free_coords[i]];
  return out;
}

Vec QuotientSpace::lift(const Vec& quotient_coords) const {
  if (quotient_coords.size() != free_coords.size())
    throw Error("quotient lift: dimension mismatch");
  Vec out(ambient);
  for (std::size_t i = 0; i < free_coords.size(); ++i) out[free_coords[i]] = quotient_coords[i];
  return out;
}

} // namespace folcoh
