#pragma once

#include "knots/params.hpp"

#include <string>

namespace knots {

/// Deterministic SVG of the braid diagram: one polyline family per strand
/// (class "strand-k"), under-strands gapped at crossings, crossing markers
/// classed "crossing-pos" / "crossing-neg". Byte-identical for fixed params.
std::string render_braid_svg(const KnotParams& params);

}  // namespace knots
