#pragma once

#include <stdexcept>
#include <string>

#include "apollo/packing.hpp"

namespace apollo {

struct VerificationFailedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RenderOptions {
    RatRect viewport{-2, -2, 2, 2};
    Int pixel_width = 800;
    Rat label_min_radius_px = 8;
    bool draw_spinors = false;
    Rat stroke_width_px = 1;
};

/// Format an exact rational as a plain decimal with 12 significant digits,
/// trailing zeros stripped. This is the only place geometry leaves the
/// rationals.
std::string format_decimal(const Rat& value);

/// Deterministic SVG for a verified packing: one circle per finite disk in
/// canonical order, half-planes as boundary lines clipped to the viewport,
/// curvature labels on disks large enough on screen, and optional spinor
/// arrows at the tangency points.
std::string to_svg(const Packing& p, const RenderOptions& opts);

}  // namespace apollo
