#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opalg/catalog/catalog.hpp"
#include "opalg/core/operator.hpp"
#include "opalg/core/structure.hpp"

namespace opalg::workbench {

/**
 * On-disk description of an algebra:
 *
 *   {
 *     "dimension": 3,
 *     "basis_names": ["L1", "L2", "L3"],
 *     "bracket": [[0, 1, 2, "1"], ...],
 *     "triple": [[0, 0, 0, 0, "2"], ...],
 *     "operators": {"R": [["1", "0", "0"], ...]}
 *   }
 *
 * Indices are 0-based. Scalars are strings "p" or "p/q" in lowest terms with
 * q > 0. Entries not listed are zero.
 */
struct AlgebraFile
{
  std::size_t dimension = 0;
  std::vector<std::string> basis_names;
  std::optional<BilinearStructure> bracket;
  std::optional<TrilinearStructure> triple;
  std::map<std::string, Operator> operators;

  const Operator& op(std::string_view name) const;

  friend bool operator==(const AlgebraFile&, const AlgebraFile&) = default;
};

/// Throws ParseError naming the line (syntax) or field path (content).
AlgebraFile parse_algebra_file(std::string_view text);

/// Canonical text: fixed key order, entries sorted by index, zero entries
/// dropped, one entry per line. parse_algebra_file(render(f)) == f.
std::string render_algebra_file(const AlgebraFile& f);

/// Export of a catalog entry. `triple_key` selects among its triples
/// (empty picks the primary one).
AlgebraFile from_catalog(const catalog::CatalogEntry& entry, std::string_view triple_key = {});

} // namespace opalg::workbench
