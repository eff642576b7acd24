#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mrbld/rational.hpp"

namespace mrbld {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scaled(const Rational& s, const Vector& v);
/// y += s * x
void axpy(Vector& y, const Rational& s, const Vector& x);

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);
  /// Columns must all have length `rows`.
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix diagonal(const std::vector<Rational>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  void set_column(std::size_t c, const Vector& v);
  std::span<const Rational> entries() const { return data_; }

  Matrix transpose() const;
  bool is_zero() const;

  /// Stacks `other` below this matrix; column counts must agree.
  Matrix vstack(const Matrix& other) const;
  /// Places `other` to the right of this matrix; row counts must agree.
  Matrix hstack(const Matrix& other) const;
  /// Rectangular block [r0, r0+nr) x [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& x);

/// Block-diagonal sum diag(a, b).
Matrix direct_sum(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix form;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form. The pivot in each column is the first nonzero
/// entry at or below the current pivot row, so the output is reproducible.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

Rational determinant(const Matrix& m);

/// Inverse of a square matrix; throws DimensionMismatch if singular.
Matrix inverse(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<Vector> nullspace_basis(const Matrix& m);

/// Pivot columns of `m`: a basis of its column space drawn from its columns.
std::vector<Vector> column_space_basis(const Matrix& m);

bool in_column_space(const Matrix& m, const Vector& v);

/// Some x with m x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// rank(big) - rank(small), where the columns of both span subspaces of the
/// same ambient space. Throws SubspaceViolation if a column of `small` lies
/// outside the column space of `big`.
std::size_t quotient_dim(const Matrix& big, const Matrix& small);

/// Greedily extends `base` by vectors of `candidates`, keeping each candidate
/// that raises the rank. Returns the chosen candidates in order.
std::vector<Vector> extend_basis(const std::vector<Vector>& base, const std::vector<Vector>& candidates,
                                 std::size_t ambient_dim);

}  // namespace mrbld
