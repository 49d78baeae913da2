#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "chroma/coloring.hpp"
#include "chroma/graph.hpp"

namespace chroma {

inline constexpr int kGraphFormatVersion = 1;

// Graph interchange document:
//   { "version": 1,
//     "points":   [[x, y], ...],        optional
//     "edges":    [[i, j], ...],        0-based; optional when points and interval are given
//     "demands":  [m0, m1, ...],        optional, defaults to all 1
//     "labels":   [l0, l1, ...],        optional, 1-based display labels
//     "interval": {"d": 1.3} }          optional
// A document with points and an interval is re-validated on load: every listed
// edge must classify Edge and every other pair Below/Above. Without "edges" the
// edge set is derived from the geometry.
std::string graph_to_json(const GeometricGraph& g);
GeometricGraph graph_from_json(const std::string& text, const ToleranceConfig& tolcfg = {});

void save_graph(const GeometricGraph& g, const std::filesystem::path& path);
GeometricGraph load_graph(const std::filesystem::path& path, const ToleranceConfig& tolcfg = {});

// Companion format: { "colorings": [ [ [colors of v0], [colors of v1], ... ], ... ] }
std::string colorings_to_json(std::span<const SetColoring> colorings);
std::vector<SetColoring> colorings_from_json(const std::string& text);

// Topology with demand and label as vertex attributes.
std::string graph_to_dot(const GeometricGraph& g);

// Geometric embedding; vertices filled with their colors (multi-colored
// vertices drawn as pie slices) when a coloring is supplied. Graphs without
// coordinates are drawn on a circle.
std::string graph_to_svg(const GeometricGraph& g, const SetColoring* coloring = nullptr);

// Fill color used for palette index c in all SVG output.
std::string_view svg_color(int c);

void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace chroma
