#include <cmath>
#include <numbers>
#include <random>

#include "chroma/constants.hpp"
#include "chroma/errors.hpp"
#include "chroma/geometry.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chroma;

namespace {

ConvexPolygon square(double cx, double cy, double side) {
    const double h = side / 2;
    return ConvexPolygon({{cx - h, cy - h}, {cx + h, cy - h}, {cx + h, cy + h}, {cx - h, cy + h}});
}

ConvexPolygon hex(double cx, double cy, double s) {
    std::vector<Point2> vs;
    for (const auto& p : oracle::hexagon(cx, cy, s)) vs.emplace_back(p[0], p[1]);
    return ConvexPolygon(vs);
}

oracle::Poly plain(const ConvexPolygon& p) {
    oracle::Poly out;
    for (const Point2& v : p.vertices()) out.push_back({v.x, v.y});
    return out;
}

}  // namespace

TEST_CASE("point rejects non-finite coordinates") {
    CHECK_THROWS_AS(Point2(std::nan(""), 0.0), DomainError);
    CHECK_THROWS_AS(Point2(0.0, INFINITY), DomainError);
    CHECK(distance({0, 0}, {3, 4}) == doctest::Approx(5.0));
}

TEST_CASE("chord lengths") {
    CHECK(std::abs(chord_length(18, 3) - 1.0) < 1e-15);
    CHECK(chord_length(18, 4) == doctest::Approx(1.285575).epsilon(1e-6));
    CHECK(std::abs(chord_length(18, 5) - 2.0 * std::sin(5.0 * std::numbers::pi / 18.0)) < 1e-15);
    CHECK(chord_length(18, 5) == doctest::Approx(1.532089).epsilon(1e-6));
    CHECK(chord_length(4, 2, 2.0) == doctest::Approx(4.0));
    CHECK_THROWS_AS(chord_length(18, 10), DomainError);
    CHECK_THROWS_AS(chord_length(18, 0), DomainError);
    CHECK_THROWS_AS(chord_length(2, 1), DomainError);
    CHECK_THROWS_AS(chord_length(6, 1, 0.0), DomainError);
}

TEST_CASE("chord length increases with the step") {
    for (int n = 3; n <= 40; ++n)
        for (int k = 1; 2 * (k + 1) <= n; ++k) CHECK(chord_length(n, k) < chord_length(n, k + 1));
}

TEST_CASE("interval conversions") {
    CHECK(interval_from_eps(0).d() == 1.0);
    CHECK(interval_from_eps(0.5).d() == doctest::Approx(3.0));
    CHECK(interval_from_d(1).eps() == 0.0);
    CHECK(interval_from_d(3).eps() == doctest::Approx(0.5));
    // eps for d = 2 sin(2 pi/9): (d - 1) / (d + 1).
    const double d = 2 * std::sin(2 * std::numbers::pi / 9);
    CHECK(interval_from_d(d).eps() == doctest::Approx((d - 1) / (d + 1)).epsilon(1e-12));
    CHECK(interval_from_d(d).eps() == doctest::Approx(0.124945).epsilon(1e-5));
    // eps for d = sqrt(7)/2, solved by bisection on (1+e)/(1-e) = d.
    double lo = 0, hi = 0.5;
    for (int i = 0; i < 200; ++i) {
        const double mid = (lo + hi) / 2;
        ((1 + mid) / (1 - mid) < std::sqrt(7.0) / 2 ? lo : hi) = mid;
    }
    CHECK(std::abs(interval_from_d(std::sqrt(7.0) / 2).eps() - lo) < 1e-12);
    CHECK(lo == doctest::Approx(0.138998).epsilon(1e-5));
    CHECK_THROWS_AS(interval_from_eps(1.0), DomainError);
    CHECK_THROWS_AS(interval_from_eps(-0.1), DomainError);
    CHECK_THROWS_AS(interval_from_d(0.99), DomainError);
}

TEST_CASE("interval round trip and orientation") {
    for (int i = 0; i <= 900; ++i) {
        const double eps = i / 1000.0;
        const IntervalSpec s = interval_from_eps(eps);
        CHECK(std::abs(s.d() - (1 + eps) / (1 - eps)) <= 1e-12 * s.d());
        CHECK(std::abs(interval_from_d(s.d()).eps() - eps) <= 1e-12);
        CHECK(s.d() >= 1.0);
    }
}

TEST_CASE("tolerance configuration") {
    CHECK_THROWS_AS(ToleranceConfig(0, 1e-6), DomainError);
    CHECK_THROWS_AS(ToleranceConfig(1e-6, 1e-9), DomainError);
    CHECK_NOTHROW(ToleranceConfig(1e-6, 1e-6));
}

TEST_CASE("distance classification") {
    CHECK(classify_distance(1.0, interval_from_d(1.29)) == DistanceClass::Edge);
    CHECK(classify_distance(1.29, interval_from_d(1.29)) == DistanceClass::Edge);
    CHECK(classify_distance(2 * std::sin(std::numbers::pi / 9), interval_from_d(1.29)) == DistanceClass::Below);
    CHECK(classify_distance(1.532089, interval_from_d(std::sqrt(7.0) / 2)) == DistanceClass::Above);
    CHECK(classify_distance(1.0 - 5e-7, interval_from_d(1.29)) == DistanceClass::Ambiguous);
    CHECK(classify_distance(1.29 + 5e-7, interval_from_d(1.29)) == DistanceClass::Ambiguous);
    CHECK(classify_distance(1.0 - 1e-10, interval_from_d(1.29)) == DistanceClass::Edge);
    CHECK(classify_distance(1.0 - 1e-3, interval_from_d(1.29)) == DistanceClass::Below);
    CHECK(to_string(DistanceClass::Ambiguous) == "Ambiguous");
}

TEST_CASE("distance classification is monotone") {
    const IntervalSpec spec = interval_from_d(1.3);
    int rank = 0;
    for (int i = 0; i <= 300000; ++i) {
        const double dist = i * 1e-5;
        const DistanceClass c = classify_distance(dist, spec);
        if (c == DistanceClass::Ambiguous) {
            CHECK((std::abs(dist - 1.0) < 1e-6 || std::abs(dist - 1.3) < 1e-6));
            continue;
        }
        const int r = c == DistanceClass::Below ? 0 : c == DistanceClass::Edge ? 1 : 2;
        CHECK(r >= rank);
        rank = r;
    }
    CHECK(rank == 2);
}

TEST_CASE("convex polygon validation") {
    CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}}), DomainError);
    CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}, {1, 0}}), DomainError);
    CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {0, 1}, {1, 0}}), DomainError);              // clockwise
    CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}, {2, 0}, {1, 1}}), DomainError);      // collinear
    CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {2, 0}, {1, 0.2}, {2, 2}, {0, 2}}), DomainError);  // reflex
    CHECK(square(0, 0, 1).contains({0.2, 0.3}));
    CHECK(!square(0, 0, 1).contains({0.6, 0}));
}

TEST_CASE("polygon diameter") {
    CHECK(polygon_diameter(hex(0, 0, 0.5)) == doctest::Approx(1.0));
    CHECK(polygon_diameter(square(0, 0, 1)) == doctest::Approx(std::sqrt(2.0)));
    CHECK(polygon_diameter(hex(3, -1, 0.49)) == doctest::Approx(0.98));
}

TEST_CASE("polygon minimum distance") {
    CHECK(polygon_min_distance(square(0, 0, 1), square(3, 0, 1)) == doctest::Approx(2.0));
    CHECK(polygon_min_distance(square(0, 0, 1), square(0, 0, 1)) == 0.0);
    CHECK(polygon_min_distance(square(0, 0, 1), square(0.2, 0.1, 0.2)) == 0.0);  // nested
    CHECK(polygon_min_distance(square(0, 0, 1), square(1, 0, 1)) == 0.0);        // touching
    // Two same-colored hexagons of the 7-coloring, side 0.5: centers (-3,1)
    // axial apart, i.e. (sqrt(3)*0.5*(-2.5), 0.75).
    const double s = 0.5;
    const ConvexPolygon a = hex(0, 0, s);
    const ConvexPolygon b = hex(s * std::sqrt(3.0) * (-3 + 0.5), 1.5 * s, s);
    CHECK(polygon_min_distance(a, b) == doctest::Approx(std::sqrt(7.0) / 2).epsilon(1e-12));
    CHECK(polygon_min_distance(a, b) == doctest::Approx(1.3228757).epsilon(1e-7));
}

TEST_CASE("polygon distance properties against a sampling oracle") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> pos(-4, 4), size(0.2, 1.5);
    int separated = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const ConvexPolygon p = hex(pos(rng), pos(rng), size(rng));
        const ConvexPolygon q = square(pos(rng), pos(rng), size(rng));
        const double d = polygon_min_distance(p, q);
        CHECK(d == doctest::Approx(polygon_min_distance(q, p)).epsilon(1e-12));
        for (const Point2& u : p.vertices())
            for (const Point2& v : q.vertices()) CHECK(d <= distance(u, v) + 1e-12);
        if (d > 0) {
            ++separated;
            const double sampled = oracle::sampled_polygon_distance(plain(p), plain(q), 400);
            CHECK(d <= sampled + 1e-12);
            CHECK(sampled - d < 1e-6);
        }
    }
    CHECK(separated > 100);
}

TEST_CASE("segment primitives") {
    CHECK(point_segment_distance({0, 1}, {-1, 0}, {1, 0}) == doctest::Approx(1.0));
    CHECK(point_segment_distance({3, 4}, {0, 0}, {0, 0}) == doctest::Approx(5.0));
    CHECK(segments_intersect({0, 0}, {2, 2}, {0, 2}, {2, 0}));
    CHECK(!segments_intersect({0, 0}, {1, 0}, {0, 1}, {1, 1}));
    CHECK(segment_distance({0, 0}, {1, 0}, {0, 1}, {1, 1}) == doctest::Approx(1.0));
    CHECK(segment_distance({0, 0}, {2, 2}, {0, 2}, {2, 0}) == 0.0);
}

TEST_CASE("named constants") {
    CHECK(rim_chord_bound() == doctest::Approx(chord_length(18, 4)).epsilon(1e-15));
    CHECK(std::abs(rim_chord_bound() - 1.285575) < 1e-6);
    CHECK(std::abs(hex_tiling_bound() - 1.322876) < 1e-6);
    int checked = 0;
    for (const NamedConstant& c : constant_registry()) {
        if (c.value) {
            CHECK(*c.mismatch() < 1e-6);
            ++checked;
        } else {
            CHECK(c.quoted == doctest::Approx(1.285987));
        }
    }
    CHECK(checked == 4);
}
