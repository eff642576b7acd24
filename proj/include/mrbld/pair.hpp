#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mrbld/errors.hpp"
#include "mrbld/lie_algebra.hpp"

namespace mrbld {

/// Lie algebra with a modified Rota-Baxter operator R of weight `weight`
/// and a derivation d commuting with R.
struct MRBLieDerPair {
  LieAlgebra algebra;
  Rational weight;
  Matrix R;
  Matrix d;

  std::size_t dim() const { return algebra.dim(); }
  friend bool operator==(const MRBLieDerPair&, const MRBLieDerPair&) = default;
};

/// Module V over a pair: one action matrix per basis element of A plus the
/// operator R_V and derivation d_V on V.
struct Representation {
  MRBLieDerPair pair;
  std::size_t dimV = 0;
  std::vector<Matrix> rho;
  Matrix RV;
  Matrix dV;

  /// rho(a) = sum_i a_i rho(e_i).
  Matrix action(const Vector& a) const;
  friend bool operator==(const Representation&, const Representation&) = default;
};

struct PairMorphism {
  MRBLieDerPair source;
  MRBLieDerPair target;
  Matrix map;  // target.dim() x source.dim()
};

class InvalidPair : public Error {
 public:
  InvalidPair(const std::string& what, ValidationReport report) : Error(what), report(std::move(report)) {}
  ValidationReport report;
};

class InvalidRepresentation : public Error {
 public:
  InvalidRepresentation(const std::string& what, ValidationReport report) : Error(what), report(std::move(report)) {}
  ValidationReport report;
};

class NotRotaBaxter : public Error {
 public:
  NotRotaBaxter(const std::string& what, ValidationReport report) : Error(what), report(std::move(report)) {}
  ValidationReport report;
};

// Shape checks; throw DimensionMismatch.
void check_shapes(const MRBLieDerPair& p);
void check_shapes(const Representation& r);

/// Lie axioms, the modified Rota-Baxter identity
/// [Ra,Rb] = R([Ra,b]+[a,Rb]) + weight [a,b], the derivation law and R d = d R.
ValidationReport validate_pair(const MRBLieDerPair& p);

/// Action homomorphism, operator compatibility
/// rho(Ra)(R_V u) = R_V(rho(Ra)u + rho(a)R_V u) + weight rho(a)u,
/// derivation compatibility d_V rho(a) = rho(da) + rho(a) d_V and R_V d_V = d_V R_V.
/// Throws InvalidPair if the underlying pair fails validate_pair.
ValidationReport validate_representation(const Representation& r);

/// Bracket preservation and intertwining of R and d. Throws InvalidPair if
/// either end fails validate_pair.
ValidationReport validate_morphism(const PairMorphism& m);

Representation adjoint_representation(const MRBLieDerPair& p);

/// V with zero action, keeping the given R_V and d_V.
Representation trivial_representation(const MRBLieDerPair& p, const Matrix& RV, const Matrix& dV);

/// Checks that T is a Rota-Baxter operator of weight lambda,
/// [Ta,Tb] = T([Ta,b]+[a,Tb]+lambda[a,b]), that d is a derivation and T d = d T.
ValidationReport validate_rota_baxter(const LieAlgebra& alg, const Matrix& T, const Matrix& d, const Rational& lambda);

/// (A, 2T + lambda Id, d) at weight -lambda^2. Throws NotRotaBaxter when the
/// input fails validate_rota_baxter.
MRBLieDerPair from_rota_baxter(const LieAlgebra& alg, const Matrix& T, const Matrix& d, const Rational& lambda);

/// Pair on A + V with [a+u,b+v] = [a,b] + rho(a)v - rho(b)u, operator
/// R + R_V and derivation d + d_V. Throws InvalidRepresentation.
MRBLieDerPair semidirect_product(const Representation& r);

/// (A, [a,b]_R = [Ra,b] + [a,Rb], R, d). Throws InvalidPair.
MRBLieDerPair induced_pair(const MRBLieDerPair& p);

/// Representation of induced_pair(p) with rho_R(a) = rho(Ra) - R_V rho(a)
/// and the same R_V, d_V. Throws InvalidRepresentation.
Representation induced_representation(const Representation& r);

/// Both the pair and the representation written in new bases: columns of
/// g for A and of h for V.
MRBLieDerPair change_basis(const MRBLieDerPair& p, const Matrix& g);
Representation change_basis(const Representation& r, const Matrix& g, const Matrix& h);

/// The weight w with [Ra,Rb] - R([Ra,b]+[a,Rb]) = w [a,b] on every basis
/// pair, if one exists. nullopt when no such w exists or when every bracket
/// vanishes (then any w is acceptable iff the left side vanishes too).
std::optional<Rational> fit_weight(const LieAlgebra& alg, const Matrix& R);

enum class TransformMode { scale, reflect };

/// Verdict on a transformed representation. `scale` replaces
/// (R, R_V) by (kappa R, kappa R_V) at claimed weight kappa*weight;
/// `reflect` replaces them by (-weight Id - R, -weight Id - R_V) at the
/// unchanged weight. Both the claimed weight and an alternative are tried:
/// kappa^2*weight for scale, the fitted weight (if any) for reflect.
struct TransformVerdict {
  TransformMode mode = TransformMode::scale;
  Representation claimed;
  ValidationReport claimed_pair_report;
  ValidationReport claimed_rep_report;  // empty when the pair itself fails
  bool claimed_valid = false;
  std::optional<Representation> alternative;
  bool alternative_valid = false;
};

/// Throws InvalidRepresentation if r does not validate.
TransformVerdict transform_representation(const Representation& r, TransformMode mode, const Rational& kappa = 1);

}  // namespace mrbld
