#pragma once

#include <string>
#include <string_view>

#include "mccgs/mccgs.hpp"

namespace mccgs {

/// One row per segment: lpp | basis | set description.
std::string render_text(const MccgsTree& T);
std::string render_json(const MccgsTree& T);
/// DOT digraph with one cluster per segment.
std::string render_dot(const MccgsTree& T);

/// Inverse of render_json: rings, bases, trees and diagnostics. Red-specs
/// are not serialized and come back empty.
MccgsTree parse_json(std::string_view text);

/// Set expression of a P-tree, e.g. "V(b) \ V(b, c) U V(d)".
std::string describe(const PTree& T);

}  // namespace mccgs
