#pragma once

#include <iosfwd>
#include <string>

#include "simat/matrix.hpp"

namespace simat {

/// Text format:
///   # optional comments
///   domain: <tag>
///   e11 e12 | e13 ...     entries whitespace-separated, `|` marks column cuts
///   ---                    a dash line marks a row cut
///   e21 e22 | e23 ...
/// Column-cut positions must be identical on every row (InconsistentCuts is
/// reported as a ParseError naming the row). Endpoints are integers for
/// z*/nat, and integers, `p/q` fractions, or exact decimals for qplus/unit.
SuperIntervalMatrix parse_matrix(const std::string& text);
SuperIntervalMatrix load_matrix(const std::string& path);

enum class RenderFormat { Text, Json };

/// Canonical rendering; parse(render(A)) == A bit-exactly. With
/// decimals=true, unit/qplus endpoints that have terminating decimal
/// expansions are echoed as decimals.
std::string render_matrix(const SuperIntervalMatrix& a, RenderFormat format = RenderFormat::Text,
                          bool decimals = false);

}  // namespace simat
