#pragma once

#include <string>

#include "qda/render/svg.hpp"

namespace qda {

/// The (a, b)-plane: the m = 4 stratum curve solid, the m = 3 curve dashed,
/// their common cusp labeled T5, zone letters at the sample points, and with
/// draw_m_curve the dotted M curve and its cusp.
std::string render_ab_plane(const PlotSpec& spec);

}  // namespace qda
