#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mrbld/matrix.hpp"

namespace mrbld {

/// One failed instance of an identity: which identity, at which basis
/// tuple, and the two sides that should have agreed.
struct Violation {
  std::string identity;
  std::vector<std::size_t> indices;
  Vector lhs;
  Vector rhs;
};

/// Outcome of a validator. Violations are listed in the order the basis
/// tuples were scanned (identity by identity, tuples lexicographically).
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool violates(std::string_view identity) const;
  void append(const ValidationReport& other);
  /// Distinct identity names that failed, in first-seen order.
  std::vector<std::string> failed_identities() const;
  std::string summary() const;
};

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c(i,j,k) e_k, indices 0-based.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Abelian algebra of the given dimension.
  explicit LieAlgebra(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

  /// Raw constants in (i,j,k) row-major order; no antisymmetry is imposed,
  /// so validate_lie can be used to inspect arbitrary data.
  static LieAlgebra from_constants(std::size_t dim, std::vector<Rational> constants);

  std::size_t dim() const { return dim_; }
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }

  /// Sets [e_i,e_j] = value and [e_j,e_i] = -value. Requires i != j.
  void set_bracket(std::size_t i, std::size_t j, const Vector& value);

  Vector bracket_basis(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& a, const Vector& b) const;
  /// Matrix of ad_{e_i}: column j is [e_i, e_j].
  Matrix ad(std::size_t i) const;
  Matrix ad(const Vector& a) const;
  bool is_abelian() const;

  /// The same algebra written in the basis given by the columns of g:
  /// [x,y]' = g^{-1}[g x, g y].
  LieAlgebra change_basis(const Matrix& g) const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> c_;
};

/// Checks antisymmetry of the constants and the Jacobi identity on every
/// basis triple.
ValidationReport validate_lie(const LieAlgebra& algebra);

}  // namespace mrbld
