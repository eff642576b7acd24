#include "mrbld/lie_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "mrbld/errors.hpp"

namespace mrbld {

bool ValidationReport::violates(std::string_view identity) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.identity == identity; });
}

void ValidationReport::append(const ValidationReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::vector<std::string> ValidationReport::failed_identities() const {
  std::vector<std::string> names;
  for (const auto& v : violations)
    if (std::find(names.begin(), names.end(), v.identity) == names.end()) names.push_back(v.identity);
  return names;
}

namespace {

std::string join_vector(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + ")";
}

}  // namespace

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  os << violations.size() << " violation(s)";
  for (const auto& v : violations) {
    os << "\n  " << v.identity << " at (";
    for (std::size_t i = 0; i < v.indices.size(); ++i) os << (i ? "," : "") << v.indices[i];
    os << "): lhs=" << join_vector(v.lhs) << " rhs=" << join_vector(v.rhs);
  }
  return os.str();
}

LieAlgebra LieAlgebra::from_constants(std::size_t dim, std::vector<Rational> constants) {
  if (constants.size() != dim * dim * dim) throw DimensionMismatch("structure constants must have dim^3 entries");
  LieAlgebra alg;
  alg.dim_ = dim;
  alg.c_ = std::move(constants);
  return alg;
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
  if (i >= dim_ || j >= dim_) throw DimensionMismatch("set_bracket: basis index out of range");
  if (i == j) throw DimensionMismatch("set_bracket: [e_i,e_i] is zero by antisymmetry");
  if (value.size() != dim_) throw DimensionMismatch("set_bracket: value has wrong length");
  for (std::size_t k = 0; k < dim_; ++k) {
    c_[(i * dim_ + j) * dim_ + k] = value[k];
    c_[(j * dim_ + i) * dim_ + k] = -value[k];
  }
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vector out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = constant(i, j, k);
  return out;
}

Vector LieAlgebra::bracket(const Vector& a, const Vector& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw DimensionMismatch("bracket: argument length mismatch");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      const Rational s = a[i] * b[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!constant(i, j, k).is_zero()) out[k] += s * constant(i, j, k);
    }
  }
  return out;
}

Matrix LieAlgebra::ad(std::size_t i) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = constant(i, j, k);
  return m;
}

Matrix LieAlgebra::ad(const Vector& a) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) m.set_column(j, bracket(a, unit_vector(dim_, j)));
  return m;
}

bool LieAlgebra::is_abelian() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
}

LieAlgebra LieAlgebra::change_basis(const Matrix& g) const {
  if (g.rows() != dim_ || g.cols() != dim_) throw DimensionMismatch("change_basis: matrix shape mismatch");
  const Matrix g_inv = inverse(g);
  LieAlgebra out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      out.set_bracket(i, j, g_inv * bracket(g.column(i), g.column(j)));
  return out;
}

ValidationReport validate_lie(const LieAlgebra& algebra) {
  ValidationReport report;
  const std::size_t n = algebra.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (algebra.constant(i, j, k) != -algebra.constant(j, i, k))
          report.violations.push_back({"antisymmetry", {i, j, k}, {algebra.constant(i, j, k)}, {-algebra.constant(j, i, k)}});

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        Vector sum = algebra.bracket(algebra.bracket_basis(i, j), ek);
        sum = add(sum, algebra.bracket(algebra.bracket_basis(j, k), ei));
        sum = add(sum, algebra.bracket(algebra.bracket_basis(k, i), ej));
        if (!is_zero(sum)) report.violations.push_back({"jacobi", {i, j, k}, sum, zero_vector(n)});
      }
  return report;
}

}  // namespace mrbld
