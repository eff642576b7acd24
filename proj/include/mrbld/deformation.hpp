#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mrbld/cohomology.hpp"

namespace mrbld {

class Rng;

/// Truncated formal deformation (mu_t, R_t, d_t) of a pair: mu[i-1], R[i-1],
/// d[i-1] are the coefficients of t^i for i = 1..order; the t^0 terms are the
/// base pair.
struct DeformationJet {
  MRBLieDerPair base;
  std::size_t order = 1;
  std::vector<Cochain> mu;
  std::vector<Matrix> R;
  std::vector<Matrix> d;

  /// All higher coefficients zero.
  static DeformationJet zero(const MRBLieDerPair& base, std::size_t order);
  friend bool operator==(const DeformationJet&, const DeformationJet&) = default;
};

/// psi_t = Id + sum_i psi[i-1] t^i.
struct EquivalenceJet {
  std::vector<Matrix> psi;
  std::size_t order() const { return psi.size(); }
  friend bool operator==(const EquivalenceJet&, const EquivalenceJet&) = default;
};

/// Degree-2 bracket cochain of an algebra.
Cochain bracket_cochain(const LieAlgebra& alg);

/// Throws DimensionMismatch unless every coefficient matches the base.
void check_shapes(const DeformationJet& j);

/// The t^n coefficient of the four deformation equations (Jacobi,
/// modified Rota-Baxter, derivation, commutation) on every basis tuple.
/// Identities: "jacobi", "modified-rota-baxter", "derivation",
/// "operator-commutation"; each violation carries the residual as lhs.
ValidationReport check_order(const DeformationJet& j, std::size_t n);

class OrderOneFails : public Error {
 public:
  OrderOneFails(const std::string& what, ValidationReport report) : Error(what), report(std::move(report)) {}
  ValidationReport report;
};

struct Infinitesimal {
  /// ((mu_1, R_1), (d_1, 0)) in the degree-2 combined space.
  QuadCochain quad;
  /// Its coboundary with adjoint coefficients.
  CocycleVerdict verdict;
};

/// Throws OrderOneFails if the order-1 equations fail.
Infinitesimal infinitesimal(const DeformationJet& j, PhiConvention convention = PhiConvention::corrected);

/// The jet (mu', R', d') with psi_t mu'_t = mu_t (psi_t x psi_t),
/// psi_t R'_t = R_t psi_t and psi_t d'_t = d_t psi_t, truncated at j.order.
DeformationJet apply_equivalence(const DeformationJet& j, const EquivalenceJet& e);

/// Truncated product psi_1(t) psi_2(t), so that applying e1 then e2 equals
/// applying compose(e1, e2).
EquivalenceJet compose(const EquivalenceJet& e1, const EquivalenceJet& e2, std::size_t order);

/// True iff infinitesimal(j2) - infinitesimal(j1) = D^1(psi_1). Throws
/// OrderOneFails if either jet fails at order 1.
bool infinitesimals_cohomologous(const DeformationJet& j1, const DeformationJet& j2, const EquivalenceJet& e,
                                 PhiConvention convention = PhiConvention::corrected);

struct RigidityReport {
  std::size_t dimH2 = 0;
  /// dim H^2 = 0, which suffices for rigidity. False says nothing about
  /// rigidity itself.
  bool rigid_by_criterion = false;
  /// Representatives of H^2: candidate nontrivial infinitesimals.
  std::vector<QuadCochain> candidates;
};

RigidityReport rigidity_report(const MRBLieDerPair& p, PhiConvention convention = PhiConvention::corrected);

/// The order-1 equations as a linear system in the coordinates of
/// (mu_1, R_1, d_1), ordered like the f, g, h slots of the degree-2 combined
/// space with adjoint coefficients.
Matrix order1_system(const MRBLieDerPair& p);

/// Jet of order 1 with the given (mu_1, R_1, d_1) coordinates.
DeformationJet order1_jet_from_coords(const MRBLieDerPair& p, const Vector& coords);

/// Random integer combination of a nullspace basis of order1_system.
DeformationJet sample_order1_jet(Rng& rng, const MRBLieDerPair& p);

}  // namespace mrbld
