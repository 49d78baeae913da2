#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "chroma/geometry.hpp"

namespace chroma {

using Edge = std::pair<int, int>;

/// Undirected simple graph with optional planar embedding, per-vertex color
/// demand (1 = ordinary, 2 = bi-chromatic, 3 = tri-chromatic, ...), optional
/// 1-based display labels and the interval it was built for. Edges are stored
/// normalized (i < j) and sorted. Immutable once constructed.
class GeometricGraph {
public:
    GeometricGraph() = default;
    GeometricGraph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<int> demands,
                   std::vector<Point2> points = {}, std::vector<int> labels = {},
                   std::optional<IntervalSpec> interval = std::nullopt);

    std::size_t size() const noexcept { return demands_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const int> demands() const noexcept { return demands_; }
    std::span<const Point2> points() const noexcept { return points_; }
    bool has_points() const noexcept { return !points_.empty(); }
    bool has_labels() const noexcept { return !labels_.empty(); }
    std::span<const int> labels() const noexcept { return labels_; }
    const std::optional<IntervalSpec>& interval() const noexcept { return interval_; }

    std::span<const int> neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int demand(int v) const { return demands_[static_cast<std::size_t>(v)]; }
    bool has_edge(int u, int v) const;
    int total_demand() const;

    // Display label: explicit label if present, else index + 1.
    int label(int v) const;
    // Throws DomainError for unknown labels.
    int index_of_label(int label) const;

    GeometricGraph with_demand(int v, int demand) const;
    // Induced subgraph on the remaining vertices; labels are preserved (made
    // explicit if they were implicit).
    GeometricGraph without_vertices(const std::set<int>& removed) const;

    /// When points and interval are present: every edge classifies Edge and
    /// every non-edge Below/Above. Throws ValidationError otherwise.
    void validate_geometry(const ToleranceConfig& tolcfg = {}) const;

    friend bool operator==(const GeometricGraph& a, const GeometricGraph& b);

private:
    std::vector<Edge> edges_;
    std::vector<int> demands_;
    std::vector<Point2> points_;
    std::vector<int> labels_;
    std::optional<IntervalSpec> interval_;
    std::vector<std::vector<int>> adjacency_;
};

struct CirculantSpec {
    int n = 0;
    std::set<int> offsets;
};

/// n points at angles phase + 2*pi*k/n (counterclockwise) on a circle about the origin.
std::vector<Point2> circle_layout(int n, double radius, double phase = 0.0);

/// circle_layout(n1, r1, 0) followed by circle_layout(n2, r2, phase2).
std::vector<Point2> two_ring_layout(int n1, int n2, double r1, double r2, double phase2);

/// Edges are exactly the pairs whose distance classifies as Edge. Throws
/// ConstructionError naming the pair if any distance is Ambiguous.
GeometricGraph build_interval_graph(std::vector<Point2> points, const IntervalSpec& spec,
                                    const ToleranceConfig& tolcfg, std::vector<int> demands,
                                    std::vector<int> labels = {});

/// Unit circle with 18 vertices numbered clockwise from the top; C18(3,4).
GeometricGraph build_rim18();

/// build_rim18 with one vertex (1-based label) promoted to the given demand.
GeometricGraph build_rim18_with_demand(int label = 1, int demand = 2);

/// The 19-vertex graph: rim18 (indices 0..17, labels 1..18) plus a center
/// vertex (index 18, label 19) at the origin. Center demand 3, rim vertex 1
/// demand 2. Requires 2 sin(2pi/9) < d <= sqrt(7)/2.
GeometricGraph build_paper19(double d, const ToleranceConfig& tolcfg = {});

/// Abstract circulant graph C_n(offsets); no coordinates.
GeometricGraph circulant(const CirculantSpec& spec);

/// K_{n+1} with demands n+1, n, ..., 1. Coordinates (a regular unit simplex)
/// are attached for n <= 2 only.
GeometricGraph simplex_instance(int n);

}  // namespace chroma
