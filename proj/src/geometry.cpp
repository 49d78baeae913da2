#include "chroma/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <string>

#include "chroma/errors.hpp"

namespace chroma {

Point2::Point2(double x_, double y_) : x(x_), y(y_) {
    if (!std::isfinite(x_) || !std::isfinite(y_)) {
        throw DomainError("Point2: coordinates must be finite");
    }
}

Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

IntervalSpec interval_from_eps(double eps) {
    if (!(eps >= 0.0) || !(eps < 1.0)) {
        throw DomainError("interval_from_eps: eps must lie in [0, 1), got " + std::to_string(eps));
    }
    return IntervalSpec((1.0 + eps) / (1.0 - eps), eps);
}

IntervalSpec interval_from_d(double d) {
    if (!(d >= 1.0) || !std::isfinite(d)) {
        throw DomainError("interval_from_d: d must be finite and >= 1, got " + std::to_string(d));
    }
    return IntervalSpec(d, (d - 1.0) / (d + 1.0));
}

ToleranceConfig::ToleranceConfig(double tol, double margin) : tol_(tol), margin_(margin) {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("ToleranceConfig: tol must be positive");
    if (!(margin >= tol) || !std::isfinite(margin)) throw DomainError("ToleranceConfig: margin must be >= tol");
}

std::string_view to_string(DistanceClass c) {
    switch (c) {
        case DistanceClass::Below: return "Below";
        case DistanceClass::Edge: return "Edge";
        case DistanceClass::Above: return "Above";
        case DistanceClass::Ambiguous: return "Ambiguous";
    }
    return "?";
}

double chord_length(int n, int k, double radius) {
    if (n < 3) throw DomainError("chord_length: n must be >= 3");
    if (k < 1 || 2 * k > n) {
        throw DomainError("chord_length: step " + std::to_string(k) + " outside [1, n/2] for n = " + std::to_string(n));
    }
    if (!(radius > 0.0)) throw DomainError("chord_length: radius must be positive");
    return 2.0 * radius * std::sin(k * std::numbers::pi / n);
}

DistanceClass classify_distance(double dist, const IntervalSpec& spec, const ToleranceConfig& tolcfg) {
    const double tol = tolcfg.tol();
    const double margin = tolcfg.margin();
    auto in_shell = [&](double boundary) {
        const double gap = std::abs(dist - boundary);
        return gap > tol && gap < margin - tol;
    };
    if (in_shell(1.0) || in_shell(spec.d())) return DistanceClass::Ambiguous;
    if (dist < 1.0 - tol) return DistanceClass::Below;
    if (dist > spec.d() + tol) return DistanceClass::Above;
    return DistanceClass::Edge;
}

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) throw DomainError("ConvexPolygon: need at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (vertices_[i] == vertices_[j]) throw DomainError("ConvexPolygon: repeated vertex");
        }
    }
    // Every other vertex strictly left of every edge: strict convexity, CCW
    // orientation and simplicity in one pass.
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = vertices_[i];
        const Point2 b = vertices_[(i + 1) % n];
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || j == (i + 1) % n) continue;
            if (!(cross(b - a, vertices_[j] - a) > 0.0)) {
                throw DomainError("ConvexPolygon: vertices are not strictly convex in counterclockwise order");
            }
        }
    }
}

bool ConvexPolygon::contains(Point2 p) const {
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = vertices_[i];
        const Point2 b = vertices_[(i + 1) % n];
        if (cross(b - a, p - a) < 0.0) return false;
    }
    return true;
}

double polygon_diameter(const ConvexPolygon& p) {
    double best = 0.0;
    const auto vs = p.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) best = std::max(best, distance(vs[i], vs[j]));
    }
    return best;
}

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return distance(p, a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return distance(p, a + t * ab);
}

namespace {

int orientation(Point2 a, Point2 b, Point2 c) {
    const double v = cross(b - a, c - a);
    return (v > 0.0) - (v < 0.0);
}

bool on_segment(Point2 p, Point2 a, Point2 b) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(c, a, b)) return true;
    if (o2 == 0 && on_segment(d, a, b)) return true;
    if (o3 == 0 && on_segment(a, c, d)) return true;
    if (o4 == 0 && on_segment(b, c, d)) return true;
    return false;
}

double segment_distance(Point2 a, Point2 b, Point2 c, Point2 d) {
    if (segments_intersect(a, b, c, d)) return 0.0;
    return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                     point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

double polygon_min_distance(const ConvexPolygon& p, const ConvexPolygon& q) {
    const auto pv = p.vertices();
    const auto qv = q.vertices();
    if (q.contains(pv[0]) || p.contains(qv[0])) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pv.size(); ++i) {
        const Point2 a = pv[i];
        const Point2 b = pv[(i + 1) % pv.size()];
        for (std::size_t j = 0; j < qv.size(); ++j) {
            const Point2 c = qv[j];
            const Point2 d = qv[(j + 1) % qv.size()];
            best = std::min(best, segment_distance(a, b, c, d));
            if (best == 0.0) return 0.0;
        }
    }
    return best;
}

}  // namespace chroma
