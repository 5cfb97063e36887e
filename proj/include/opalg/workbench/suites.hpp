#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "opalg/core/check.hpp"
#include "opalg/core/operator.hpp"
#include "opalg/workbench/algebra_file.hpp"
#include "opalg/workbench/report.hpp"

namespace opalg::workbench {

/// An algebra plus where it came from. `digest` is the SHA-256 of the file
/// bytes, or of the canonical rendering for catalog entries.
struct SuiteInput
{
  AlgebraFile algebra;
  std::string label;
  std::string digest;
};

/// "catalog:NAME" (or a bare catalog name) or a path to an algebra file.
/// Throws Error / ParseError on unknown names, unreadable files or bad content.
SuiteInput load_input(std::string_view spec);
SuiteInput input_from_text(std::string_view text, std::string label);
SuiteInput input_from_catalog(std::string_view name);

struct SuiteOptions
{
  CheckOptions check;
  JtsVariant variant = JtsVariant::jacobson;
  /// Role -> operator name, overriding the defaults (R, R1, R2, rho, xi).
  std::map<std::string, std::string> roles;
  /// Coefficient lists (constant term first) for polynomial-closure.
  std::vector<Polynomial> polynomials;
  /// Accept a triple failing the JTS identity; reports carry a marker.
  bool unchecked = false;
};

/**
 * Suites:
 *  lie-base             antisymmetry, jacobi
 *  myb                  mYB for R, jacobi of [.,.]_R
 *  polynomial-closure   mYB for f(R)
 *  bi-myb               bi-mYB for (R1,R2), xi characterization, R0 probe,
 *                       even-tempered flags
 *  even-tempered        even-tempered in both parametrizations
 *  jts                  five-variable identity (chosen variant asserted)
 *  design               JTS + equivariance + design condition
 *  triple-myb           triple mYB, full/reduced agreement, intertwining,
 *                       JTS of the derived triple
 *  triple-bi-myb        core conditions plus normal / even-tempered flags
 *  rho-identity         rho identity, with the derived-triple form when R1 exists
 *  rrho                 both identities, regular flag, jacobi of [.,.]_rho
 *  bunch                gamma-bunch in all degrees, coefficient round trip
 *  rrho+bunch           both of the above
 *
 * Throws Error for unknown suites or missing operators/structures and
 * GuardExceeded when a sweep is above the guard without force.
 */
RunReport run_suite(const SuiteInput& input, std::string_view suite, const SuiteOptions& opts = {});

std::vector<std::string> suite_names();

/// Derived structures available to `derive`: bracket-r, bracket-rho, triple-r, triple-r-full.
std::vector<std::string> derive_names();

/**
 * A copy of the algebra whose bracket or triple is replaced by the derived
 * one. `ops` supplies R (and rho for bracket-rho). triple-r requires the
 * triple mYB identity; triple-r-full does not.
 */
AlgebraFile derive(const AlgebraFile& f, std::string_view which, const std::map<std::string, std::string>& ops,
                   const SuiteOptions& opts = {});

} // namespace opalg::workbench
