#pragma once

#include <vector>

#include "chroma/coloring.hpp"
#include "chroma/graph.hpp"
#include "oracles.hpp"

namespace test {

inline oracle::Graph plain(const chroma::GeometricGraph& g) {
    oracle::Graph out;
    out.n = static_cast<int>(g.size());
    out.edges.assign(g.edges().begin(), g.edges().end());
    out.demands.assign(g.demands().begin(), g.demands().end());
    return out;
}

inline std::vector<std::vector<int>> sets(const chroma::SetColoring& c) {
    std::vector<std::vector<int>> out;
    for (chroma::ColorSet s : c) out.push_back(s.colors());
    return out;
}

}  // namespace test
