#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mrbld/cochain.hpp"

namespace mrbld {

/// Outcome of solving for the phi coefficients that make
/// phi^{n+1} delta_CE = delta_mRBO phi^n hold on sampled cochains.
struct PhiCalibration {
  Rational weight;
  std::size_t max_subset = 0;
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  std::size_t equations = 0;
  /// The verbatim coefficients satisfy every sampled equation.
  bool verbatim_certified = false;
  /// Some table with R_V composed on every correction term (the verbatim
  /// shape, coefficients free) satisfies every sampled equation.
  bool verbatim_shape_solvable = false;
  /// Affine dimension of the solutions with a free plain and a free
  /// composed coefficient for every subset size r >= 1. The identity alone
  /// does not single out one table, so this is usually positive.
  std::size_t full_solution_dim = 0;
  /// Unique solution with one coefficient per subset size: composed with
  /// R_V for odd r, plain for even r. nullopt if that shape is inconsistent.
  std::optional<PhiTable> table;
};

/// Imposes the chain-map identity at degrees 0..max_degree-1 on
/// `cochains_per_degree` random cochains for every instance, and solves the
/// resulting exact linear system for coefficients of subset sizes
/// 0..max_degree, with phi^0 = Id. All instances must share one weight.
/// Throws Underdetermined when the parity shape has more than one solution.
PhiCalibration calibrate_phi(const std::vector<Representation>& instances, std::size_t max_degree,
                             std::uint64_t seed, std::size_t cochains_per_degree = 2);

/// Same, on `instance_count` random nonabelian instances of the given weight.
PhiCalibration calibrate_phi(const Rational& weight, std::size_t max_degree, std::uint64_t seed,
                             std::size_t instance_count = 4);

}  // namespace mrbld
