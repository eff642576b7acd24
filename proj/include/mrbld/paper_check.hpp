#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mrbld {

enum class ClaimStatus { pass, fail, finding };

std::string to_string(ClaimStatus status);

struct ClaimVerdict {
  std::string claim;
  ClaimStatus status = ClaimStatus::pass;
  std::string detail;
};

struct PaperCheckReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<ClaimVerdict> claims;

  /// No claim has status fail. Findings do not count as failures.
  bool ok() const;
  /// One line per claim: "<STATUS> <claim>: <detail>".
  std::string text() const;
};

/// Runs every executable claim on `trials` random instances per claim (at
/// least 1). Claims whose stated form is known to be suspect report
/// `finding` together with the form that does hold.
PaperCheckReport paper_check(std::uint64_t seed, std::size_t trials);

}  // namespace mrbld
