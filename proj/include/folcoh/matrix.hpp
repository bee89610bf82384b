#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "folcoh/rational.hpp"

namespace folcoh {

/// Dense matrix over exact rationals. Everything downstream (cohomology ranks,
/// kernels, projectors) reduces to the eliminations implemented here.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);
  static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_col(std::size_t j, const Vec& v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Scalar& c) const;
  Vec apply(const Vec& v) const;
  bool operator==(const Matrix& rhs) const { return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_; }
  bool is_zero() const;

  /// Rank by fraction-free (Bareiss) elimination on a denominator-cleared copy.
  std::size_t rank() const;

  /// Exact determinant, Bareiss on the denominator-cleared matrix.
  Scalar determinant() const;

  /// Reduced row echelon form; pivot column indices appended to *pivots if given.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;

  /// Canonical kernel basis: one vector per free column, ascending, with a 1 in
  /// the free slot and the RREF back-substitution elsewhere.
  std::vector<Vec> kernel_basis() const;

  /// One exact solution of A x = b (free variables set to 0), or nullopt.
  std::optional<Vec> solve(const Vec& b) const;

  std::optional<Matrix> inverse() const;

private:
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

/// Kronecker product with block convention kron(A,B)[(i,k),(j,l)] = A(i,j)·B(k,l),
/// row index i·B.rows()+k. Matches the (multi-index major, fiber minor) vector
/// layout used by the cochain and chain complexes.
Matrix kron(const Matrix& a, const Matrix& b);

/// Canonical basis of span(vectors): nonzero rows of the RREF of the stacked rows.
std::vector<Vec> echelon_basis(std::size_t dim, const std::vector<Vec>& vectors);

/// Coordinates of v in the given spanning columns, or nullopt if v is outside.
std::optional<Vec> express_in_span(std::size_t dim, const std::vector<Vec>& basis, const Vec& v);

/// Quotient of Q^ambient by the span of the relation vectors. Coset
/// representatives are canonical: zero at every pivot coordinate of the
/// relation row space; the standard vectors at the free coordinates descend
/// to a basis of the quotient.
struct QuotientSpace {
  std::size_t ambient = 0;
  Matrix relations_rref{0, 0};
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> free_coords;

  std::size_t dim() const { return free_coords.size(); }
  Vec reduce(const Vec& v) const;
  Vec coords(const Vec& v) const;
  Vec lift(const Vec& quotient_coords) const;
};
QuotientSpace make_quotient(std::size_t ambient, const std::vector<Vec>& relations);

} // namespace folcoh
