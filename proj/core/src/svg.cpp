#include "formation/svg.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

namespace formation {

namespace {

constexpr int kScale = 60;
constexpr int kMargin = 40;

constexpr const char* kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
};
constexpr int kPaletteSize = static_cast<int>(std::size(kPalette));

int px(int grid_coord) { return kMargin + grid_coord * kScale; }

} // namespace

std::vector<std::string> render_svg_frames(const Instance& inst, const Schedule& s) {
    const Graph& g = inst.graph;
    if (!g.has_coords())
        throw std::invalid_argument("render_svg_frames: instance has no coordinates");

    int max_x = 0, max_y = 0;
    for (const Coord& c : g.coords()) {
        max_x = std::max(max_x, c.x);
        max_y = std::max(max_y, c.y);
    }
    const int width = px(max_x) + kMargin;
    const int height = px(max_y) + kMargin;

    std::string base;
    for (const Edge& e : g.edges()) {
        const Coord a = g.coord(e.u), b = g.coord(e.v);
        base += "  <line x1=\"" + std::to_string(px(a.x)) + "\" y1=\"" +
                std::to_string(px(a.y)) + "\" x2=\"" + std::to_string(px(b.x)) +
                "\" y2=\"" + std::to_string(px(b.y)) +
                "\" stroke=\"#c8c8c8\" stroke-width=\"2\"/>\n";
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const Coord c = g.coord(v);
        base += "  <circle cx=\"" + std::to_string(px(c.x)) + "\" cy=\"" +
                std::to_string(px(c.y)) +
                "\" r=\"5\" fill=\"#ffffff\" stroke=\"#909090\"/>\n";
    }
    for (VertexId v : inst.goals) {
        const Coord c = g.coord(v);
        base += "  <rect x=\"" + std::to_string(px(c.x) - 12) + "\" y=\"" +
                std::to_string(px(c.y) - 12) +
                "\" width=\"24\" height=\"24\" fill=\"none\" stroke=\"#404040\" "
                "stroke-width=\"2\"/>\n";
    }
    for (VertexId v : inst.starts) {
        const Coord c = g.coord(v);
        base += "  <circle cx=\"" + std::to_string(px(c.x)) + "\" cy=\"" +
                std::to_string(px(c.y)) +
                "\" r=\"14\" fill=\"none\" stroke=\"#a0a0a0\" stroke-width=\"2\" "
                "stroke-dasharray=\"4 3\"/>\n";
    }

    const int frames = makespan(s) + 1;
    std::vector<std::string> out;
    out.reserve(frames);
    for (int t = 0; t < frames; ++t) {
        std::string doc =
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
            std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n" +
            base;
        for (size_t i = 0; i < s.occupancy.size(); ++i) {
            const Coord c = g.coord(s.occupancy[i][t]);
            doc += "  <circle cx=\"" + std::to_string(px(c.x)) + "\" cy=\"" +
                   std::to_string(px(c.y)) + "\" r=\"11\" fill=\"" +
                   kPalette[i % kPaletteSize] + "\"/>\n";
            doc += "  <text x=\"" + std::to_string(px(c.x)) + "\" y=\"" +
                   std::to_string(px(c.y) + 4) +
                   "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#ffffff\" "
                   "text-anchor=\"middle\">" +
                   std::to_string(i + 1) + "</text>\n";
        }
        doc += "</svg>\n";
        out.push_back(std::move(doc));
    }
    return out;
}

} // namespace formation
