#pragma once

#include <cmath>
#include <span>
#include <string_view>
#include <vector>

namespace chroma {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    Point2() = default;
    // Throws DomainError on NaN or infinite coordinates.
    Point2(double x_, double y_);

    friend bool operator==(const Point2&, const Point2&) = default;
};

Point2 operator+(Point2 a, Point2 b);
Point2 operator-(Point2 a, Point2 b);
Point2 operator*(double s, Point2 p);
double dot(Point2 a, Point2 b);
double cross(Point2 a, Point2 b);
double distance(Point2 a, Point2 b);

/// Forbidden-distance interval [1, d], equivalently [1-eps, 1+eps] after
/// rescaling, with d = (1+eps)/(1-eps). Build through interval_from_d or
/// interval_from_eps so both fields stay in sync.
class IntervalSpec {
public:
    double d() const noexcept { return d_; }
    double eps() const noexcept { return eps_; }

    friend bool operator==(const IntervalSpec&, const IntervalSpec&) = default;

private:
    IntervalSpec(double d, double eps) : d_(d), eps_(eps) {}
    friend IntervalSpec interval_from_eps(double eps);
    friend IntervalSpec interval_from_d(double d);

    double d_;
    double eps_;
};

IntervalSpec interval_from_eps(double eps);
IntervalSpec interval_from_d(double d);

/// `tol` absorbs floating-point noise on comparisons; `margin` is the minimum
/// clearance from an interval boundary for a distance to classify without
/// ambiguity. Invariant: 0 < tol <= margin.
class ToleranceConfig {
public:
    ToleranceConfig() = default;
    ToleranceConfig(double tol, double margin);

    double tol() const noexcept { return tol_; }
    double margin() const noexcept { return margin_; }

private:
    double tol_ = 1e-9;
    double margin_ = 1e-6;
};

enum class DistanceClass { Below, Edge, Above, Ambiguous };

std::string_view to_string(DistanceClass c);

/// Chord of step k on a regular n-gon inscribed in a circle of the given radius.
double chord_length(int n, int k, double radius = 1.0);

/// Boundaries of [1, d] are inclusive. A distance whose gap to a boundary lies
/// strictly between tol and margin (with tol slack on the margin side) is
/// Ambiguous; graph builders reject it.
DistanceClass classify_distance(double dist, const IntervalSpec& spec, const ToleranceConfig& tolcfg = {});

class ConvexPolygon {
public:
    // Vertices in counterclockwise order; throws DomainError unless the
    // polygon is strictly convex with at least 3 distinct vertices.
    explicit ConvexPolygon(std::vector<Point2> vertices);

    std::span<const Point2> vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    bool contains(Point2 p) const;

private:
    std::vector<Point2> vertices_;
};

double polygon_diameter(const ConvexPolygon& p);

/// Exact minimum distance between two closed convex regions; 0 when they
/// intersect or touch.
double polygon_min_distance(const ConvexPolygon& p, const ConvexPolygon& q);

double point_segment_distance(Point2 p, Point2 a, Point2 b);
double segment_distance(Point2 a, Point2 b, Point2 c, Point2 d);
bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d);

}  // namespace chroma
