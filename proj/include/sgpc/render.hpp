#pragma once

#include <string>

#include "sgpc/document.hpp"

namespace sgpc {

enum class RenderStyle { ascii, svg };

RenderStyle parse_render_style(std::string_view text);

/// ASCII legend, one character per grid point, rows top to bottom:
///   S  source            C  connector source (from annotations)
///   x  deleted source    #  point inside an obstacle
///   o  covered point     .  uncovered point
/// The grid side is the instance's p, or the largest center coordinate when
/// the document has no instance.
///
/// SVG: grid dots, shaded obstacle rectangles, translucent coverage disks,
/// source centers, connector and deletion marks, and uncovered points and
/// samples in red. Output is byte-identical for equal documents.
std::string render(const PlacementDocument& doc, RenderStyle style);

}  // namespace sgpc
