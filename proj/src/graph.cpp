#include "chroma/graph.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>

#include "chroma/coloring.hpp"
#include "chroma/constants.hpp"
#include "chroma/errors.hpp"

namespace chroma {

GeometricGraph::GeometricGraph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<int> demands,
                               std::vector<Point2> points, std::vector<int> labels,
                               std::optional<IntervalSpec> interval)
    : edges_(std::move(edges)),
      demands_(std::move(demands)),
      points_(std::move(points)),
      labels_(std::move(labels)),
      interval_(interval),
      adjacency_(vertex_count) {
    const int n = static_cast<int>(vertex_count);
    if (demands_.size() != vertex_count) {
        throw ValidationError("graph: " + std::to_string(demands_.size()) + " demands for " +
                              std::to_string(vertex_count) + " vertices");
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
        if (demands_[v] < 1 || demands_[v] > kMaxColors) {
            throw ValidationError("graph: vertex " + std::to_string(v) + " has demand " +
                                  std::to_string(demands_[v]) + " outside [1, 32]");
        }
    }
    if (!points_.empty() && points_.size() != vertex_count) {
        throw ValidationError("graph: " + std::to_string(points_.size()) + " points for " +
                              std::to_string(vertex_count) + " vertices");
    }
    if (!labels_.empty()) {
        if (labels_.size() != vertex_count) throw ValidationError("graph: label count does not match vertex count");
        std::vector<int> sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw ValidationError("graph: duplicate vertex labels");
        }
        if (!sorted.empty() && sorted.front() < 1) throw ValidationError("graph: labels must be positive");
    }
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ValidationError("graph: edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        }
        if (u == v) throw ValidationError("graph: self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw ValidationError("graph: duplicate edge");
    }
    for (const auto& [u, v] : edges_) {
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool GeometricGraph::has_edge(int u, int v) const {
    const auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

int GeometricGraph::total_demand() const { return std::accumulate(demands_.begin(), demands_.end(), 0); }

int GeometricGraph::label(int v) const {
    return labels_.empty() ? v + 1 : labels_[static_cast<std::size_t>(v)];
}

int GeometricGraph::index_of_label(int label) const {
    if (labels_.empty()) {
        if (label >= 1 && label <= static_cast<int>(size())) return label - 1;
    } else {
        const auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it != labels_.end()) return static_cast<int>(it - labels_.begin());
    }
    throw DomainError("graph: no vertex labelled " + std::to_string(label));
}

GeometricGraph GeometricGraph::with_demand(int v, int demand) const {
    if (v < 0 || v >= static_cast<int>(size())) throw DomainError("with_demand: vertex out of range");
    std::vector<int> demands = demands_;
    demands[static_cast<std::size_t>(v)] = demand;
    return GeometricGraph(size(), edges_, std::move(demands), points_, labels_, interval_);
}

GeometricGraph GeometricGraph::without_vertices(const std::set<int>& removed) const {
    const int n = static_cast<int>(size());
    std::vector<int> remap(size(), -1);
    std::vector<int> demands, labels;
    std::vector<Point2> points;
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (removed.contains(v)) continue;
        remap[static_cast<std::size_t>(v)] = next++;
        demands.push_back(demand(v));
        labels.push_back(label(v));
        if (has_points()) points.push_back(points_[static_cast<std::size_t>(v)]);
    }
    for (int r : removed) {
        if (r < 0 || r >= n) throw DomainError("without_vertices: vertex out of range");
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : edges_) {
        const int a = remap[static_cast<std::size_t>(u)];
        const int b = remap[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0) edges.emplace_back(a, b);
    }
    return GeometricGraph(static_cast<std::size_t>(next), std::move(edges), std::move(demands), std::move(points),
                          std::move(labels), interval_);
}

void GeometricGraph::validate_geometry(const ToleranceConfig& tolcfg) const {
    if (!has_points() || !interval_) return;
    const int n = static_cast<int>(size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dist = distance(points_[static_cast<std::size_t>(i)], points_[static_cast<std::size_t>(j)]);
            const DistanceClass c = classify_distance(dist, *interval_, tolcfg);
            const bool edge = has_edge(i, j);
            std::ostringstream msg;
            msg.precision(17);
            if (c == DistanceClass::Ambiguous) {
                msg << "pair (" << i << "," << j << ") at distance " << dist << " is ambiguous for d = "
                    << interval_->d();
                throw ValidationError(msg.str());
            }
            if (edge != (c == DistanceClass::Edge)) {
                msg << "pair (" << i << "," << j << ") at distance " << dist << " classifies " << to_string(c)
                    << " but is " << (edge ? "" : "not ") << "listed as an edge";
                throw ValidationError(msg.str());
            }
        }
    }
}

bool operator==(const GeometricGraph& a, const GeometricGraph& b) {
    return a.edges_ == b.edges_ && a.demands_ == b.demands_ && a.points_ == b.points_ && a.labels_ == b.labels_ &&
           a.interval_ == b.interval_;
}

std::vector<Point2> circle_layout(int n, double radius, double phase) {
    if (n < 1) throw DomainError("circle_layout: n must be >= 1");
    if (!(radius > 0.0)) throw DomainError("circle_layout: radius must be positive");
    std::vector<Point2> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double a = phase + 2.0 * std::numbers::pi * k / n;
        pts.emplace_back(radius * std::cos(a), radius * std::sin(a));
    }
    return pts;
}

std::vector<Point2> two_ring_layout(int n1, int n2, double r1, double r2, double phase2) {
    if (n1 < 1 || n2 < 1) throw DomainError("two_ring_layout: both rings need at least one point");
    auto pts = circle_layout(n1, r1, 0.0);
    auto outer = circle_layout(n2, r2, phase2);
    pts.insert(pts.end(), outer.begin(), outer.end());
    return pts;
}

GeometricGraph build_interval_graph(std::vector<Point2> points, const IntervalSpec& spec,
                                    const ToleranceConfig& tolcfg, std::vector<int> demands,
                                    std::vector<int> labels) {
    if (points.empty()) throw DomainError("build_interval_graph: no points");
    if (demands.size() != points.size()) throw DomainError("build_interval_graph: demands length mismatch");
    std::vector<Edge> edges;
    const int n = static_cast<int>(points.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dist = distance(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
            switch (classify_distance(dist, spec, tolcfg)) {
                case DistanceClass::Edge: edges.emplace_back(i, j); break;
                case DistanceClass::Ambiguous: {
                    std::ostringstream msg;
                    msg.precision(17);
                    msg << "build_interval_graph: pair (" << i << "," << j << ") at distance " << dist
                        << " is within margin " << tolcfg.margin() << " of a boundary of [1, " << spec.d() << "]";
                    throw ConstructionError(msg.str());
                }
                default: break;
            }
        }
    }
    return GeometricGraph(static_cast<std::size_t>(n), std::move(edges), std::move(demands), std::move(points), std::move(labels), spec);
}

namespace {

// Label k (1-based) at angle pi/2 - 2 pi (k-1)/n: clockwise from the top.
std::vector<Point2> clockwise_rim(int n) {
    std::vector<Point2> pts;
    for (int k = 0; k < n; ++k) {
        const double a = std::numbers::pi / 2.0 - 2.0 * std::numbers::pi * k / n;
        pts.emplace_back(std::cos(a), std::sin(a));
    }
    return pts;
}

std::vector<int> one_based(int n) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    return labels;
}

}  // namespace

GeometricGraph build_rim18() {
    // Any d in the working interval yields C18(3,4); 1.30 sits well inside it.
    return build_interval_graph(clockwise_rim(18), interval_from_d(1.30), {}, std::vector<int>(18, 1),
                                one_based(18));
}

GeometricGraph build_rim18_with_demand(int label, int demand) {
    const GeometricGraph rim = build_rim18();
    return rim.with_demand(rim.index_of_label(label), demand);
}

GeometricGraph build_paper19(double d, const ToleranceConfig& tolcfg) {
    if (!(d > rim_chord_bound()) || !(d <= hex_tiling_bound() + 1e-12)) {
        std::ostringstream msg;
        msg.precision(10);
        msg << "build_paper19: d = " << d << " outside (2 sin(2pi/9), sqrt(7)/2] = (" << rim_chord_bound() << ", "
            << hex_tiling_bound() << "]";
        throw DomainError(msg.str());
    }
    auto pts = clockwise_rim(18);
    pts.emplace_back(0.0, 0.0);
    std::vector<int> demands(19, 1);
    demands[0] = 2;
    demands[18] = 3;
    return build_interval_graph(std::move(pts), interval_from_d(d), tolcfg, std::move(demands), one_based(19));
}

GeometricGraph circulant(const CirculantSpec& spec) {
    if (spec.n < 3) throw DomainError("circulant: n must be >= 3");
    if (spec.offsets.empty()) throw DomainError("circulant: offsets must be nonempty");
    std::set<Edge> edges;
    for (int o : spec.offsets) {
        if (o < 1 || 2 * o > spec.n) {
            throw DomainError("circulant: offset " + std::to_string(o) + " outside [1, n/2]");
        }
        for (int i = 0; i < spec.n; ++i) {
            const int j = (i + o) % spec.n;
            edges.insert({std::min(i, j), std::max(i, j)});
        }
    }
    return GeometricGraph(static_cast<std::size_t>(spec.n), {edges.begin(), edges.end()},
                          std::vector<int>(static_cast<std::size_t>(spec.n), 1));
}

GeometricGraph simplex_instance(int n) {
    if (n < 0 || n > 8) throw DomainError("simplex_instance: n must lie in [0, 8]");
    const int m = n + 1;
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) edges.emplace_back(i, j);
    std::vector<int> demands;
    for (int i = 0; i < m; ++i) demands.push_back(m - i);
    std::vector<Point2> points;
    if (n == 0) points = {{0.0, 0.0}};
    if (n == 1) points = {{0.0, 0.0}, {1.0, 0.0}};
    if (n == 2) points = {{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}};
    return GeometricGraph(static_cast<std::size_t>(m), std::move(edges), std::move(demands), std::move(points));
}

}  // namespace chroma
