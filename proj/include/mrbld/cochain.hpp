#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mrbld/pair.hpp"

namespace mrbld {

/// n choose k.
std::size_t binomial(std::size_t n, std::size_t k);

/// Strictly increasing k-tuples from {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

/// Position of a strictly increasing tuple in the lexicographic order of
/// combinations(n, tuple.size()).
std::size_t combination_index(const std::vector<std::size_t>& tuple, std::size_t n);

/// Alternating multilinear map from the n-th exterior power of a
/// source_dim-dimensional space to a target_dim-dimensional space, stored on
/// strictly increasing index tuples in lexicographic order.
struct Cochain {
  std::size_t degree = 0;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::vector<Vector> values;

  static Cochain zero(std::size_t degree, std::size_t source_dim, std::size_t target_dim);
  /// Degree-1 cochain with matrix m (target_dim x source_dim).
  static Cochain from_matrix(const Matrix& m);
  /// Degree-0 cochain, i.e. an element of the target space.
  static Cochain from_vector(const Vector& v, std::size_t source_dim);
  static Cochain unflatten(std::size_t degree, std::size_t source_dim, std::size_t target_dim, const Vector& coords);

  /// Number of coordinates: C(source_dim, degree) * target_dim.
  std::size_t size() const { return values.size() * target_dim; }

  /// Value on basis vectors e_{t_0},...,e_{t_{n-1}} for any index tuple:
  /// signed by the sorting permutation, zero on repeated indices.
  Vector at(const std::vector<std::size_t>& tuple) const;
  /// Multilinear evaluation on arbitrary arguments.
  Vector evaluate(const std::vector<Vector>& args) const;
  /// Degree-1 cochain as a target_dim x source_dim matrix.
  Matrix to_matrix() const;
  /// Coordinates tuple-major, then target index.
  Vector flatten() const;
  bool is_zero() const;

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Rational& s, Cochain a);
  Cochain operator-() const;
  friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// Element of C^n(A;V) + C^{n-1}(A;V).
struct PairCochain {
  Cochain f;
  Cochain g;
  friend bool operator==(const PairCochain&, const PairCochain&) = default;
};

/// Element of the combined space at degree n: ((f,g),(h,s)) for n >= 2.
/// At degree 1 only f is present and g, h, s are ignored.
struct QuadCochain {
  std::size_t degree = 1;
  Cochain f;
  Cochain g;
  Cochain h;
  Cochain s;
  friend bool operator==(const QuadCochain&, const QuadCochain&) = default;
};

/// Coefficients of phi^n. For a subset S of argument positions, the
/// arguments in S are passed unchanged and the others through R; the term
/// contributes plain[|S|] f(...) + composed[|S|] R_V f(...).
struct PhiTable {
  std::vector<Rational> plain;
  std::vector<Rational> composed;

  std::size_t max_subset() const { return plain.size() - 1; }
  friend bool operator==(const PhiTable&, const PhiTable&) = default;
};

enum class PhiConvention {
  /// Coefficients exactly as originally stated: every correction term is
  /// composed with R_V; odd r gets -(-w)^((r-1)/2), even r gets -(-w)^(r/2+1).
  verbatim,
  /// Calibrated table: odd r is as above, even r >= 2 contributes
  /// (-w)^(r/2) f(...) without R_V. This is the table that makes phi a
  /// chain map.
  corrected,
};

PhiTable phi_table(PhiConvention convention, const Rational& weight, std::size_t max_subset);

/// Generic Chevalley-Eilenberg coboundary with the alternating sign
/// convention (-1)^{i+n} on the action terms and (-1)^{i+j+n+1} on the
/// bracket terms (1-based positions).
Cochain coboundary(const LieAlgebra& alg, const std::vector<Matrix>& rho, const Cochain& f);

Cochain delta_ce(const Representation& r, const Cochain& f);

/// Coboundary of the operator complex written directly in terms of R, R_V
/// and the original bracket and action.
Cochain delta_mrbo(const Representation& r, const Cochain& f);

/// phi^n(f) with the given table; degree 0 is the identity of C^0 = V.
Cochain phi(const Representation& r, const Cochain& f, const PhiTable& table);
Cochain phi(const Representation& r, const Cochain& f, PhiConvention convention = PhiConvention::corrected);

/// Delta^n f = sum_i f(..., d a_i, ...) - d_V f.
Cochain Delta(const Representation& r, const Cochain& f);

/// (delta_CE f, -delta_mRBO g - phi f).
PairCochain partial_mrbla(const Representation& r, const PairCochain& p,
                          PhiConvention convention = PhiConvention::corrected);

/// Degree 1: ((delta_CE f, -phi f), (-Delta f, 0)).
/// Degree n >= 2: (partial(f,g), partial(h,s) + (-1)^n (Delta f, Delta g)).
QuadCochain D_mrbld(const Representation& r, const QuadCochain& q, PhiConvention convention = PhiConvention::corrected);

/// Result of checking one identity on random cochains.
struct IdentityCheck {
  std::string identity;
  std::size_t trials = 0;
  bool holds = true;
  std::vector<Cochain> counterexample;  // the input cochain(s) of the first failure
};

/// Chain-map and commutation identities at degree n:
/// phi-chain-map: phi^{n+1} delta_CE = delta_mRBO phi^n,
/// phi-Delta-commute: phi^n Delta^n = Delta^n phi^n,
/// ce-Delta-commute: delta_CE Delta^n = Delta^{n+1} delta_CE,
/// mrbo-Delta-commute: delta_mRBO Delta^n = Delta^{n+1} delta_mRBO,
/// mrbla-Delta-commute: partial Delta = Delta partial (n >= 1).
std::vector<IdentityCheck> verify_chain_maps(const Representation& r, std::size_t degree, std::size_t trials,
                                             std::uint64_t seed, PhiConvention convention = PhiConvention::corrected);

}  // namespace mrbld
