#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pqkt/analysis.hpp"
#include "pqkt/structure.hpp"

namespace pqkt {

struct IdentityResult {
  std::string suite;
  std::string id;
  std::string status;  // pass / fail / indeterminate / not-applicable
  double residual = 0;
  double tol = 0;
  int samples = 0;
  std::string note;
};

struct SuiteOptions {
  std::vector<std::string> suites;  // empty = run all
  int points = 25;
  std::uint64_t seed = 1;
  double tol_scale = 1.0;
};

const std::vector<std::string>& suite_names();

/// Evaluate every identity of the selected suites at the sample points and
/// return max residuals with pass/fail statuses. Identities whose hypotheses
/// the model does not satisfy (no compatible torsion connection, n = 1,
/// non-parallel torsion) come back not-applicable.
std::vector<IdentityResult> run_suites(std::shared_ptr<const Structure> s,
                                       const SuiteOptions& opt);

/// Independent check that Thm 3.2's connection is the only metric
/// paraquaternionic connection with skew (1,2)+(2,1) torsion: set up the
/// defining linear system in the unknown torsion components and sp(1)
/// 1-forms at one point and solve it by least squares.
struct UniquenessResult {
  int unknowns = 0;
  int rank = 0;
  double lsq_residual = 0;    // how well the system is solvable
  double match_residual = 0;  // distance of the solution to (T, omega)
};
UniquenessResult uniqueness_oracle(const PointData& d);

}  // namespace pqkt
