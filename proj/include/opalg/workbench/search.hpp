#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "opalg/core/check.hpp"
#include "opalg/workbench/report.hpp"

namespace opalg::workbench {

struct SearchOptions
{
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  /// Matrix size n of the ambient so(n) / gl(n); 0 picks the target default.
  std::size_t dim = 0;
  /// Bound B for sampled rationals p/q, |p| <= B, 1 <= q <= B.
  int entry_bound = 3;
  CheckOptions check;
};

/**
 * Seeded search for instances witnessing a claim that something fails "in
 * general". Targets:
 *
 *  r0-not-myb                    gl(n), R1/R2 = right/left mult by random Q:
 *                                midpoint (R1+R2)/2 not mYB
 *  non-even-tempered-r1-eq-r2    gl(n), R1 = R2 = mult by random Q, not even-tempered
 *  non-even-tempered-diagonal-R  so(n), R1 = R2 = diagonal mYB R, not even-tempered
 *  non-normal-triple             gl(n), XYZ+ZYX, R1 = R2 = right mult: core holds, not normal
 *  example4-nonfactorizable      so(n), diagonal Q: no eigen-root split R = R1+R2,
 *                                rho = R1R2 is bi-mYB
 *  myb-failure                   so(n), random diagonal R failing mYB
 *  full-reduced-disagree         gl(n), XYZ+ZYX, random R: full and reduced
 *                                derived triples differ
 *
 * The result lists the first witness found (with the whole algebra file
 * embedded) and how many trials produced one, or "none found in N trials".
 * Names of theorems throw Error("target is a theorem, not a claim");
 * unknown names throw Error.
 */
RunReport search(std::string_view target, const SearchOptions& opts = {});

std::vector<std::string> search_targets();
/// Statements that hold for every instance and so cannot be searched for counterexamples.
std::vector<std::string> theorem_targets();

} // namespace opalg::workbench
