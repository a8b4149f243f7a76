#pragma once

#include <string>
#include <vector>

#include "liouspec/config.hpp"
#include "liouspec/sector.hpp"

namespace liouspec {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  double deviation = 0.0;
  double tolerance = 0.0;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass() const;
};

/// Test hooks for fault injection; production callers leave this null.
struct VerifyHooks {
  SectorPerturbation block_perturbation;
};

/// Runs the bundled invariant checks for both model families at the config's
/// parameters: block-sum equivalence against the full-superoperator oracle,
/// the lab/rotating eigenvalue shift, trace preservation of the k=0 block,
/// +/-k conjugation pairing, and a spectral-vs-integration propagation spot
/// check.
VerifyReport run_verify(const RunConfig& config, const VerifyHooks* hooks = nullptr);

}  // namespace liouspec
