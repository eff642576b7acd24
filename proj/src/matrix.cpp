#include "mrbld/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "mrbld/errors.hpp"

namespace mrbld {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector add: sizes differ");
  Vector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sub: sizes differ");
  Vector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scaled(const Rational& s, const Vector& v) {
  Vector out(v.size());
  if (s.is_zero()) return out;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

void axpy(Vector& y, const Rational& s, const Vector& x) {
  if (y.size() != x.size()) throw DimensionMismatch("axpy: sizes differ");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += s * x[i];
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("from_rows: ragged row " + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw DimensionMismatch("set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::vstack(const Matrix& other) const {
  if (rows_ == 0) return other;
  if (other.rows_ == 0) return *this;
  if (cols_ != other.cols_) throw DimensionMismatch("vstack: column counts differ");
  Matrix m(rows_ + other.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return m;
}

Matrix Matrix::hstack(const Matrix& other) const {
  if (rows_ != other.rows_) throw DimensionMismatch("hstack: row counts differ");
  Matrix m(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) m(r, cols_ + c) = other(r, c);
  }
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block: out of range");
  Matrix m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix add: shapes differ");
  Matrix m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c) + b(r, c);
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sub: shapes differ");
  Matrix m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c) - b(r, c);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
  Matrix m(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c)
        if (!b(k, c).is_zero()) m(r, c) += x * b(k, c);
    }
  return m;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = s * a(r, c);
  return m;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector product: sizes differ");
  Vector y(a.rows());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (x[c].is_zero()) continue;
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (!a(r, c).is_zero()) y[r] += a(r, c) * x[c];
  }
  return y;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t found = a.rows();
    for (std::size_t r = pivot_row; r < a.rows(); ++r)
      if (!a(r, col).is_zero()) {
        found = r;
        break;
      }
    if (found == a.rows()) continue;
    if (found != pivot_row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(found, c), a(pivot_row, c));
    const Rational inv = Rational(1) / a(pivot_row, col);
    for (std::size_t c = col; c < a.cols(); ++c)
      if (!a(pivot_row, c).is_zero()) a(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a(r, col).is_zero()) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(pivot_row, c).is_zero()) a(r, c) -= factor * a(pivot_row, c);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant: matrix is not square");
  Matrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t found = n;
    for (std::size_t r = col; r < n; ++r)
      if (!a(r, col).is_zero()) {
        found = r;
        break;
      }
    if (found == n) return 0;
    if (found != col) {
      for (std::size_t c = col; c < n; ++c) std::swap(a(found, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    const Rational inv = Rational(1) / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Rational factor = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse: matrix is not square");
  const std::size_t n = m.rows();
  const RrefResult red = rref(m.hstack(Matrix::identity(n)));
  if (red.rank() < n || (n > 0 && red.pivots[n - 1] != n - 1))
    throw DimensionMismatch("inverse: matrix is singular");
  return red.form.block(0, n, n, n);
}

std::vector<Vector> nullspace_basis(const Matrix& m) {
  const RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(m.cols());
    x[free] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) x[red.pivots[i]] = -red.form(i, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<Vector> column_space_basis(const Matrix& m) {
  std::vector<Vector> basis;
  for (auto p : rref(m).pivots) basis.push_back(m.column(p));
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const RrefResult red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < red.pivots.size(); ++i) x[red.pivots[i]] = red.form(i, m.cols());
  return x;
}

bool in_column_space(const Matrix& m, const Vector& v) { return solve(m, v).has_value(); }

std::size_t quotient_dim(const Matrix& big, const Matrix& small) {
  if (big.rows() != small.rows()) throw DimensionMismatch("quotient_dim: ambient dimensions differ");
  const std::size_t rb = rank(big);
  for (std::size_t c = 0; c < small.cols(); ++c)
    if (!in_column_space(big, small.column(c)))
      throw SubspaceViolation("quotient_dim: column " + std::to_string(c) + " of the subspace lies outside the span");
  return rb - rank(small);
}

std::vector<Vector> extend_basis(const std::vector<Vector>& base, const std::vector<Vector>& candidates,
                                 std::size_t ambient_dim) {
  std::vector<Vector> current = base;
  std::size_t current_rank = rank(Matrix::from_columns(current, ambient_dim));
  std::vector<Vector> chosen;
  for (const auto& v : candidates) {
    current.push_back(v);
    const std::size_t r = rank(Matrix::from_columns(current, ambient_dim));
    if (r > current_rank) {
      current_rank = r;
      chosen.push_back(v);
    } else {
      current.pop_back();
    }
  }
  return chosen;
}

}  // namespace mrbld
