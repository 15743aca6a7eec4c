#pragma once

#include <string>
#include <string_view>

#include "algoart/graphics.hpp"
#include "algoart/waves.hpp"

/// Byte-deterministic emitters. All text output uses LF line endings and
/// locale-independent number formatting.
namespace algoart::render {

/// SVG color for a palette label: known pigment names map to hex values,
/// anything else is written verbatim.
std::string svg_color(std::string_view label);

/// Canvas in millimeters, one <polyline> per stroke in scene order, grouped
/// by consecutive stroke group. The y axis is flipped so the scene's
/// lower-left origin lands at the bottom of the page.
std::string scene_to_svg(const graphics::VectorScene& scene);

/// One stroke per line: `color pen_width x0,y0 x1,y1 ...` with 3 decimals.
std::string scene_to_stroke_dump(const graphics::VectorScene& scene);

/// Binary PGM (P5); gray = clamp(round((h / h_ref + 1) / 2 * 255)).
std::string field_to_pgm(const waves::HeightField& hf, double h_ref);

/// Row-major CSV, 6 decimals, no header.
std::string field_to_csv(const waves::HeightField& hf);

inline constexpr int kDisplayCellWidth = 7;

/// Right-aligned 7-character signed integers separated by single spaces.
std::string display_to_text(const waves::DisplayMatrix& dm);

/// 10-character ramp indexed by |value| / 999999.
inline constexpr std::string_view kAsciiRamp = " .:-=+*#%@";

std::string display_to_ascii(const waves::DisplayMatrix& dm);

}  // namespace algoart::render
