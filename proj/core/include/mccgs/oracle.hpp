#pragma once

#include <span>
#include <string>
#include <vector>

#include "mccgs/mccgs.hpp"

namespace mccgs {

struct OracleReport {
  std::size_t samples = 0;
  /// Points in the allowed region lying in zero or several segments.
  std::vector<std::string> membership_failures;
  /// Points whose specialized segment basis differs from a direct basis.
  std::vector<std::string> basis_failures;
  std::vector<std::string> warnings;

  bool passed() const { return membership_failures.empty() && basis_failures.empty(); }
};

/// Samples parameter points, half at random and half on the varieties of
/// tree vertices, and checks each against a direct basis computation.
OracleReport run_oracle(const MccgsTree& T, std::span<const Poly> F, std::span<const Poly> null0,
                        std::span<const Poly> notnull0, std::size_t samples, unsigned seed);

}  // namespace mccgs
