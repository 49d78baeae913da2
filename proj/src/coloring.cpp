#include "chroma/coloring.hpp"

#include "chroma/errors.hpp"
#include "chroma/graph.hpp"

namespace chroma {

ColorSet::ColorSet(std::initializer_list<int> colors) {
    for (int c : colors) {
        if (c < 0 || c >= kMaxColors) throw DomainError("ColorSet: color index out of range");
        insert(c);
    }
}

ColorSet ColorSet::range(int first, int count) {
    ColorSet s;
    for (int c = first; c < first + count; ++c) s.insert(c);
    return s;
}

std::vector<int> ColorSet::colors() const {
    std::vector<int> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

std::strong_ordering operator<=>(ColorSet a, ColorSet b) {
    std::uint32_t x = a.mask_;
    std::uint32_t y = b.mask_;
    while (x != 0 && y != 0) {
        const int cx = std::countr_zero(x);
        const int cy = std::countr_zero(y);
        if (cx != cy) return cx <=> cy;
        x &= x - 1;
        y &= y - 1;
    }
    return (x != 0) <=> (y != 0);
}

std::optional<std::string> coloring_violation(const GeometricGraph& g, const SetColoring& c) {
    if (c.size() != g.size()) {
        return "coloring has " + std::to_string(c.size()) + " entries for " + std::to_string(g.size()) + " vertices";
    }
    for (std::size_t v = 0; v < c.size(); ++v) {
        if (c[v].size() != g.demand(static_cast<int>(v))) {
            return "vertex " + std::to_string(v) + " has " + std::to_string(c[v].size()) + " colors, demand " +
                   std::to_string(g.demand(static_cast<int>(v)));
        }
    }
    for (const auto& [u, v] : g.edges()) {
        if (c[static_cast<std::size_t>(u)].intersects(c[static_cast<std::size_t>(v)])) {
            return "edge (" + std::to_string(u) + "," + std::to_string(v) + ") joins intersecting color sets";
        }
    }
    return std::nullopt;
}

ColorSet palette_of(const SetColoring& c) {
    ColorSet all;
    for (ColorSet s : c) all = all | s;
    return all;
}

std::string to_string(ColorSet s) {
    std::string out = "{";
    bool first = true;
    for (int c : s.colors()) {
        if (!first) out += ",";
        out += std::to_string(c);
        first = false;
    }
    return out + "}";
}

}  // namespace chroma
