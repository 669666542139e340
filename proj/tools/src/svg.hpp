#pragma once

#include <string>

#include "schur_scope/cartan.hpp"
#include "schur_scope/curves.hpp"

namespace schur_scope::cli {

/// "s_2α_3", "-s_2α_3" or "α_2".
std::string root_expression(const CurveWord& curve);

/// "s_2s_3s_2"; "e" for the empty loop.
std::string loop_expression(const LoopWord& loop);

/// Schematic SVG of a curve word: punctures on a baseline, one vertical ray
/// above each, the basepoint O below. Crossing k of m sits at height 1 + k/(m+1).
std::string render_curve_svg(const CurveWord& curve, const CartanMatrix& cartan);

/// Writes render_curve_svg to path; throws Error(Precondition) if the file cannot be written.
void write_curve_svg(const CurveWord& curve, const CartanMatrix& cartan, const std::string& path);

}  // namespace schur_scope::cli
