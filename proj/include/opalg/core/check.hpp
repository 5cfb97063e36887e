#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opalg/core/operator.hpp"
#include "opalg/core/structure.hpp"
#include "opalg/core/vector.hpp"

namespace opalg {

struct Witness
{
  std::vector<std::size_t> tuple;
  Vector residual;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/**
 * Outcome of an identity check.
 *
 * Leaf reports come from an exhaustive basis-tuple sweep; aggregate reports
 * carry sub-reports. `passed` is true exactly when `witness` is empty. For
 * leaves the witness is the lexicographically smallest failing tuple. An
 * aggregate takes the witness of its first failing asserted sub-report;
 * informational sub-reports never affect the aggregate.
 */
struct CheckReport
{
  std::string identity;
  bool passed = true;
  bool informational = false;
  std::optional<Witness> witness;
  std::uint64_t tuples_evaluated = 0;
  std::vector<std::string> markers;
  std::vector<CheckReport> subchecks;

  /// Depth-first lookup by identity name.
  const CheckReport* find(std::string_view name) const;
  /// Like find() but throws std::out_of_range when absent.
  const CheckReport& at(std::string_view name) const;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

CheckReport aggregate(std::string identity, std::vector<CheckReport> subchecks);

/// Marks a report (and returns it) as informational.
CheckReport informational(CheckReport report);

/// A report for a check that was skipped because a prerequisite failed.
CheckReport skipped(std::string identity, std::string_view reason);

struct CheckOptions
{
  /// Run checks above the desk-scale guard (arity 5 above dim 8, arity 4 above dim 12).
  bool force = false;
  /// Worker threads; 0 picks hardware concurrency.
  unsigned threads = 0;
};

/// Residual of a multilinear identity at a basis tuple; zero means it holds there.
using Residual = std::function<Vector(std::span<const std::size_t>)>;

/// Throws GuardExceeded if a dim^arity sweep is above the limits and not forced.
void enforce_guard(std::size_t dim, std::size_t arity, const CheckOptions& opts);

/// Exhaustive sweep over all dim^arity basis tuples.
CheckReport check_identity(std::string identity, std::size_t dim, std::size_t arity,
                           const Residual& residual, const CheckOptions& opts = {});

/// Columnwise equality a == b, witness = first differing basis index.
CheckReport check_operators_equal(std::string identity, const Operator& a, const Operator& b);

CheckReport check_structures_equal(std::string identity, const BilinearStructure& a,
                                   const BilinearStructure& b);
CheckReport check_structures_equal(std::string identity, const TrilinearStructure& a,
                                   const TrilinearStructure& b);

enum class JtsVariant
{
  middle,
  jacobson,
};

std::string_view to_string(JtsVariant v);
JtsVariant parse_jts_variant(std::string_view text);

CheckReport check_antisymmetry(const BilinearStructure& b, const CheckOptions& opts = {});
CheckReport check_jacobi(const BilinearStructure& b, const CheckOptions& opts = {});
/// Antisymmetry and Jacobi together.
CheckReport check_lie(const BilinearStructure& b, const CheckOptions& opts = {});

/**
 * Five-variable Jordan triple identity.
 *
 * middle:   <x,<a,z,b>,y> = <<x,a,y>,b,z> + <<y,a,z>,b,x> - <<x,b,y>,a,z>
 * jacobson: <a,b,<x,y,z>> = <<a,b,x>,y,z> - <x,<b,a,y>,z> + <x,y,<a,b,z>>
 *
 * Tuples are ordered (x,a,z,b,y) for the middle variant and (a,b,x,y,z) for
 * the jacobson variant.
 */
CheckReport check_jts_identity(const TrilinearStructure& t, JtsVariant variant,
                               const CheckOptions& opts = {});

} // namespace opalg
