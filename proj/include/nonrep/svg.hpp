#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "nonrep/coloring.hpp"

namespace nonrep {

// Fixed fill table indexed by palette position (wrapping past 28), so renders
// stay comparable across constructions.
inline constexpr std::array<const char*, 28> kSvgFills = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1",
    "#ff9da7", "#9c755f", "#bab0ac", "#1f77b4", "#aec7e8", "#ff7f0e", "#ffbb78",
    "#2ca02c", "#98df8a", "#d62728", "#ff9896", "#9467bd", "#c5b0d5", "#8c564b",
    "#c49c94", "#e377c2", "#f7b6d2", "#7f7f7f", "#c7c7c7", "#bcbd22", "#dbdb8d",
};

namespace detail {

inline void svg_rect(std::string& out, int x, int y, int size, const std::string& fill,
                     const std::string& stroke, const std::string& stroke_width) {
    out += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
           "\" width=\"" + std::to_string(size) + "\" height=\"" + std::to_string(size) +
           "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\" stroke-width=\"" +
           stroke_width + "\"/>\n";
}

inline void svg_text(std::string& out, int x, int y, int size, const std::string& body) {
    out += "<text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
           "\" text-anchor=\"middle\" dominant-baseline=\"central\" "
           "font-family=\"monospace\" font-size=\"" +
           std::to_string(size) + "\" fill=\"#1a1a1a\">" + body + "</text>\n";
}

inline std::string svg_document(int width, int height, const std::string& body) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n" + body +
           "</svg>\n";
}

}  // namespace detail

// One filled square per vertex.  Lattice colorings draw the region (3D as one
// sheet per last-coordinate layer); rook and biclique boards are drawn with
// color labels, rook cells stroked by vertex type.
inline std::string render_svg(const ColoredGraph& cg) {
    std::string body;
    const auto fill = [&](int v) {
        return std::string(kSvgFills[size_t(cg.color[v]) % kSvgFills.size()]);
    };
    if (cg.graph.family == GraphFamily::rook || cg.graph.family == GraphFamily::biclique) {
        const int cell = 36;
        int side = 0;
        for (int v = 0; v < cg.graph.nverts; ++v)
            side = std::max(side, cg.graph.payload(v)[0] + 1);
        for (int v = 0; v < cg.graph.nverts; ++v) {
            const auto p = cg.graph.payload(v);
            const int x = p[1] * cell, y = p[0] * cell;
            std::string stroke = "#555555", width = "1";
            if (!cg.vertex_type.empty()) {  // rook type shading
                stroke = cg.vertex_type[v] ? "#d4a017" : "#2b5fb8";
                width = "3";
            }
            detail::svg_rect(body, x, y, cell, fill(v), stroke, width);
            detail::svg_text(body, x + cell / 2, y + cell / 2, 13, cg.label_of(v));
        }
        if (cg.graph.family == GraphFamily::biclique) {
            const int half = side / 2 * cell, full = side * cell;
            body += "<line x1=\"" + std::to_string(half) + "\" y1=\"0\" x2=\"" +
                    std::to_string(half) + "\" y2=\"" + std::to_string(full) +
                    "\" stroke=\"#111111\" stroke-width=\"2\"/>\n";
            body += "<line x1=\"0\" y1=\"" + std::to_string(half) + "\" x2=\"" +
                    std::to_string(full) + "\" y2=\"" + std::to_string(half) +
                    "\" stroke=\"#111111\" stroke-width=\"2\"/>\n";
        }
        return detail::svg_document(side * cell, side * cell, body);
    }
    if (!cg.spec || !is_lattice_kind(cg.spec->kind))
        throw std::invalid_argument("render: unsupported coloring");
    const LatticeRegion& r = cg.spec->region;
    const int cell = 18, gap = 24;
    if (r.dim() == 2) {
        const int w = r.hi[0] - r.lo[0] + 1, h = r.hi[1] - r.lo[1] + 1;
        for (int v = 0; v < cg.graph.nverts; ++v) {
            const auto p = cg.graph.payload(v);
            detail::svg_rect(body, (p[0] - r.lo[0]) * cell, (r.hi[1] - p[1]) * cell, cell,
                             fill(v), "#555555", "0.5");
        }
        return detail::svg_document(w * cell, h * cell, body);
    }
    if (r.dim() == 3) {
        const int w = r.hi[0] - r.lo[0] + 1, h = r.hi[1] - r.lo[1] + 1;
        const int layers = r.hi[2] - r.lo[2] + 1;
        for (int v = 0; v < cg.graph.nverts; ++v) {
            const auto p = cg.graph.payload(v);
            const int ox = (p[2] - r.lo[2]) * (w * cell + gap);
            detail::svg_rect(body, ox + (p[0] - r.lo[0]) * cell, (r.hi[1] - p[1]) * cell,
                             cell, fill(v), "#555555", "0.5");
        }
        for (int l = 0; l < layers; ++l)
            detail::svg_text(body, l * (w * cell + gap) + w * cell / 2, h * cell + 12, 12,
                             "x3=" + std::to_string(r.lo[2] + l));
        return detail::svg_document(layers * (w * cell + gap) - gap,
                                    h * cell + gap, body);
    }
    throw std::invalid_argument("render: only 2D and 3D regions are drawable");
}

}  // namespace nonrep
