// Independent reference implementations used only by the tests. They work
// from multilinear evaluation on explicit argument vectors and never call
// the library's operators.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "mrbld/cochain.hpp"

namespace oracle {

using namespace mrbld;

inline Vector basis(std::size_t n, std::size_t i) { return unit_vector(n, i); }

/// Rank by fraction-free elimination choosing pivots from the last column
/// backwards and from the bottom row upwards.
inline std::size_t rank(Matrix m) {
  std::size_t r = 0;
  std::vector<bool> used(m.rows(), false);
  for (std::size_t cc = m.cols(); cc-- > 0;) {
    std::size_t piv = m.rows();
    for (std::size_t i = m.rows(); i-- > 0;)
      if (!used[i] && !m(i, cc).is_zero()) {
        piv = i;
        break;
      }
    if (piv == m.rows()) continue;
    used[piv] = true;
    ++r;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == piv || m(i, cc).is_zero()) continue;
      const Rational a = m(piv, cc), b = m(i, cc);
      for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = a * m(i, c) - b * m(piv, c);
    }
  }
  return r;
}

/// Leibniz expansion.
inline Rational determinant(const Matrix& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Builds a cochain of the given degree from its values on basis tuples.
inline Cochain tabulate(std::size_t degree, std::size_t source_dim, std::size_t target_dim,
                        const std::function<Vector(const std::vector<Vector>&)>& value) {
  Cochain out = Cochain::zero(degree, source_dim, target_dim);
  const auto tuples = combinations(source_dim, degree);
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    std::vector<Vector> args;
    for (std::size_t i : tuples[k]) args.push_back(basis(source_dim, i));
    out.values[k] = value(args);
  }
  return out;
}

inline std::vector<Vector> without(const std::vector<Vector>& args, std::size_t a, std::size_t b = SIZE_MAX) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < args.size(); ++i)
    if (i != a && i != b) out.push_back(args[i]);
  return out;
}

/// Coboundary with action `act(x)` (a matrix on V) and bracket `br`, signs
/// (-1)^{i+n} and (-1)^{i+j+n+1} with 1-based positions.
inline Cochain coboundary(const Cochain& f, const std::function<Matrix(const Vector&)>& act,
                          const std::function<Vector(const Vector&, const Vector&)>& br) {
  const std::size_t n = f.degree;
  return tabulate(n + 1, f.source_dim, f.target_dim, [&](const std::vector<Vector>& a) {
    Vector out = zero_vector(f.target_dim);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Rational sign = (i + 1 + n) % 2 ? -1 : 1;
      axpy(out, sign, act(a[i]) * f.evaluate(without(a, i)));
    }
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        const Rational sign = (i + 1 + j + 1 + n + 1) % 2 ? -1 : 1;
        std::vector<Vector> args{br(a[i], a[j])};
        for (const auto& x : without(a, i, j)) args.push_back(x);
        axpy(out, sign, f.evaluate(args));
      }
    return out;
  });
}

inline Cochain delta_ce(const Representation& r, const Cochain& f) {
  return coboundary(f, [&](const Vector& x) { return r.action(x); },
                    [&](const Vector& x, const Vector& y) { return r.pair.algebra.bracket(x, y); });
}

inline Cochain delta_mrbo(const Representation& r, const Cochain& f) {
  const Matrix& R = r.pair.R;
  return coboundary(
      f, [&](const Vector& x) { return r.action(R * x) - r.RV * r.action(x); },
      [&](const Vector& x, const Vector& y) {
        return add(r.pair.algebra.bracket(R * x, y), r.pair.algebra.bracket(x, R * y));
      });
}

/// Sum over subsets S of argument positions kept as they are, the others
/// passed through R.
inline Cochain phi(const Representation& r, const Cochain& f, const PhiTable& t) {
  const std::size_t n = f.degree;
  if (n == 0) return f;
  return tabulate(n, f.source_dim, f.target_dim, [&](const std::vector<Vector>& a) {
    Vector out = zero_vector(f.target_dim);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Vector> args;
      std::size_t kept = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const bool keep = (mask >> i) & 1;
        kept += keep;
        args.push_back(keep ? a[i] : r.pair.R * a[i]);
      }
      if (kept >= t.plain.size()) continue;
      const Vector v = f.evaluate(args);
      axpy(out, t.plain[kept], v);
      axpy(out, t.composed[kept], r.RV * v);
    }
    return out;
  });
}

inline Cochain Delta(const Representation& r, const Cochain& f) {
  return tabulate(f.degree, f.source_dim, f.target_dim, [&](const std::vector<Vector>& a) {
    Vector out = scaled(-1, r.dV * f.evaluate(a));
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::vector<Vector> args = a;
      args[i] = r.pair.d * a[i];
      out = add(out, f.evaluate(args));
    }
    return out;
  });
}

}  // namespace oracle
