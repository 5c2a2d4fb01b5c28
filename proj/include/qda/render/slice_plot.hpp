#pragma once

#include <string>
#include <vector>

#include "qda/discr/slice.hpp"
#include "qda/render/svg.hpp"

namespace qda {

struct RegionLabel {
  Rational c;
  Rational d;
  char letter;  // 'h', 't' or 's'
};

/// Viewport around the origin, the cusps, the nodes and the axis crossings.
PlotSpec default_slice_view(const SliceCurve& sc);

/// Cusps are labeled kappa, lambda, mu by increasing t, nodes phi, psi, theta
/// by increasing t1 (a numeric suffix is added beyond three). The t -> -inf
/// end is omega and the t -> +inf end is alpha, so that at (-2, 1/2) and
/// (-16, 1/10) omega is the branch crossing the negative d-half-axis.
std::string render_slice(const SliceCurve& sc, const PlotSpec& spec, const std::vector<RegionLabel>& regions = {});

}  // namespace qda
