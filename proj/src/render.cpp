#include "algoart/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "algoart/errors.hpp"
#include "algoart/text_format.hpp"

namespace algoart::render {

std::string svg_color(std::string_view label) {
    struct Named {
        std::string_view name;
        std::string_view hex;
    };
    static constexpr Named kNamed[] = {
        {"black", "#000000"}, {"ochre", "#cc7722"}, {"brown", "#7b4a2a"},
        {"red", "#c0392b"},   {"blue", "#1f4e9a"},  {"white", "#ffffff"},
    };
    for (const auto& n : kNamed) {
        if (n.name == label) {
            return std::string(n.hex);
        }
    }
    return std::string(label);
}

std::string scene_to_svg(const graphics::VectorScene& scene) {
    const std::string w = format_fixed(scene.canvas_w, 3);
    const std::string h = format_fixed(scene.canvas_h, 3);
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w + "mm\" height=\"" + h +
           "mm\" viewBox=\"0.000 0.000 " + w + ' ' + h + "\">\n";

    bool open_group = false;
    std::size_t current_group = 0;
    for (const auto& stroke : scene.strokes) {
        if (!open_group || stroke.group != current_group) {
            if (open_group) {
                out += "</g>\n";
            }
            out += "<g id=\"g" + std::to_string(stroke.group) + "\">\n";
            open_group = true;
            current_group = stroke.group;
        }
        const std::string& label = stroke.color < scene.palette.size() ? scene.palette[stroke.color] : scene.palette.front();
        out += "<polyline fill=\"none\" stroke=\"" + svg_color(label) + "\" stroke-width=\"" +
               format_fixed(stroke.pen_width, 3) + "\" stroke-linecap=\"round\" points=\"";
        for (std::size_t i = 0; i < stroke.points.size(); ++i) {
            if (i > 0) {
                out += ' ';
            }
            out += format_fixed(stroke.points[i].x, 3);
            out += ',';
            out += format_fixed(scene.canvas_h - stroke.points[i].y, 3);
        }
        out += "\"/>\n";
    }
    if (open_group) {
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

std::string scene_to_stroke_dump(const graphics::VectorScene& scene) {
    std::string out;
    for (const auto& stroke : scene.strokes) {
        out += stroke.color < scene.palette.size() ? scene.palette[stroke.color] : std::to_string(stroke.color);
        out += ' ';
        out += format_fixed(stroke.pen_width, 3);
        for (const auto& p : stroke.points) {
            out += ' ';
            out += format_fixed(p.x, 3);
            out += ',';
            out += format_fixed(p.y, 3);
        }
        out += '\n';
    }
    return out;
}

std::string field_to_pgm(const waves::HeightField& hf, double h_ref) {
    if (!(h_ref > 0.0)) {
        throw ConfigError("graymap reference height must be positive");
    }
    std::string out = "P5\n" + std::to_string(hf.cols) + ' ' + std::to_string(hf.rows) + "\n255\n";
    out.reserve(out.size() + hf.h.size());
    for (double h : hf.h) {
        const double g = std::round((h / h_ref + 1.0) / 2.0 * 255.0);
        out += static_cast<char>(static_cast<unsigned char>(std::clamp(g, 0.0, 255.0)));
    }
    return out;
}

std::string field_to_csv(const waves::HeightField& hf) {
    std::string out;
    for (std::size_t r = 0; r < hf.rows; ++r) {
        for (std::size_t c = 0; c < hf.cols; ++c) {
            if (c > 0) {
                out += ',';
            }
            out += format_fixed(hf.at(r, c), 6);
        }
        out += '\n';
    }
    return out;
}

std::string display_to_text(const waves::DisplayMatrix& dm) {
    std::string out;
    out.reserve(dm.rows * dm.cols * (kDisplayCellWidth + 1));
    for (std::size_t r = 0; r < dm.rows; ++r) {
        for (std::size_t c = 0; c < dm.cols; ++c) {
            if (c > 0) {
                out += ' ';
            }
            const std::string v = std::to_string(dm.at(r, c));
            if (v.size() < kDisplayCellWidth) {
                out.append(kDisplayCellWidth - v.size(), ' ');
            }
            out += v;
        }
        out += '\n';
    }
    return out;
}

std::string display_to_ascii(const waves::DisplayMatrix& dm) {
    std::string out;
    for (std::size_t r = 0; r < dm.rows; ++r) {
        for (std::size_t c = 0; c < dm.cols; ++c) {
            const long magnitude = std::labs(static_cast<long>(dm.at(r, c)));
            const long idx = std::min<long>(magnitude * 10 / waves::kDisplayMax, 9);
            out += kAsciiRamp[static_cast<std::size_t>(idx)];
        }
        out += '\n';
    }
    return out;
}

}  // namespace algoart::render
