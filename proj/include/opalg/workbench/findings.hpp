#pragma once

#include <nlohmann/json.hpp>

#include "opalg/core/check.hpp"
#include "opalg/workbench/report.hpp"

namespace opalg::workbench {

/**
 * Verdicts on the readings that are ambiguous as written:
 *  - "example1-operator-readings": mYB and triple-mYB for X -> <X0,X>X0 and X -> [X0,X];
 *  - "example1-triple": <X,Y>Z + <Y,Z>X versus the form-built triple with -<X,Z>Y;
 *  - "example3-sign": the derived triple of XYZ+ZYX under X -> XQ, by word expansion
 *    and by tensor comparison, against the printed XQYQZ - ZQYQX;
 *  - "jts-variant": both five-variable identities on XYZ+ZYX.
 * Every verdict comes from an exhaustive check and carries its witness.
 */
nlohmann::json findings_document(const CheckOptions& opts = {});

/// The same document wrapped in a RunReport (no asserted checks).
RunReport findings_report(const CheckOptions& opts = {});

} // namespace opalg::workbench
