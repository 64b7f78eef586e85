#pragma once

// Deterministic SVG rendering of curves and patches.  The only floating
// point in the library lives here.

#include <string>
#include <vector>

#include "terfold/covering.hpp"
#include "terfold/tcurve.hpp"

namespace terfold {

struct RenderOptions {
    double stroke_width = 0.12;
    double corner_ratio = 0.2;  // rounding radius as a fraction of edge length
    bool lattice_underlay = false;
    int top_curves = 0;  // patches: render only the k most central curves (0 = all)
};

std::string render_svg(const std::vector<TCurve>& curves,
                       const RenderOptions& opts = {});

// Star patches default to their 3 star curves; otherwise the top_curves most
// central complete curves (all curves when top_curves == 0).
std::string render_patch_svg(const CoveringPatch& patch,
                             const RenderOptions& opts = {});

}  // namespace terfold
