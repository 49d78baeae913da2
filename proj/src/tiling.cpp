#include "chroma/tiling.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "chroma/errors.hpp"
#include "chroma/graph_io.hpp"

namespace chroma {

HexCell operator+(HexCell a, HexCell b) { return {a.q + b.q, a.r + b.r}; }

int hex_distance(HexCell a, HexCell b) {
    const int dq = a.q - b.q;
    const int dr = a.r - b.r;
    return (std::abs(dq) + std::abs(dr) + std::abs(dq + dr)) / 2;
}

Point2 hex_center(HexCell cell, double side) {
    return {side * std::sqrt(3.0) * (cell.q + cell.r / 2.0), side * 1.5 * cell.r};
}

ConvexPolygon hexagon_polygon(HexCell cell, double side) {
    if (!(side > 0.0)) throw DomainError("hexagon_polygon: side must be positive");
    const Point2 c = hex_center(cell, side);
    std::vector<Point2> vs;
    for (int k = 0; k < 6; ++k) {
        const double a = std::numbers::pi / 6.0 + k * std::numbers::pi / 3.0;
        vs.emplace_back(c.x + side * std::cos(a), c.y + side * std::sin(a));
    }
    return ConvexPolygon(std::move(vs));
}

int seven_coloring(HexCell cell) { return ((cell.q + 3 * cell.r) % 7 + 7) % 7; }

bool seven_coloring_is_valid() {
    static constexpr HexCell kNeighbors[6] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
    std::set<int> seen = {seven_coloring({0, 0})};
    for (HexCell n : kNeighbors) seen.insert(seven_coloring(n));
    return seen.size() == 7;
}

TilingCertificate certify(double side, int search_radius, HexCell origin) {
    if (!(side > 0.0) || !std::isfinite(side)) throw DomainError("certify: side must be positive");
    if (search_radius < 1) throw RadiusError("certify: search radius must be at least 1");
    TilingCertificate cert;
    cert.side = side;
    cert.search_radius = search_radius;
    cert.origin = origin;
    cert.max_intra_tile = 2.0 * side;
    cert.min_same_color = std::numeric_limits<double>::infinity();
    const ConvexPolygon home = hexagon_polygon(origin, side);
    const int color = seven_coloring(origin);
    for (int dq = -search_radius; dq <= search_radius; ++dq) {
        for (int dr = -search_radius; dr <= search_radius; ++dr) {
            const HexCell cell = origin + HexCell{dq, dr};
            if (hex_distance(cell, origin) > search_radius || cell == origin) continue;
            if (seven_coloring(cell) != color) continue;
            const double dist = polygon_min_distance(home, hexagon_polygon(cell, side));
            if (dist < cert.min_same_color) {
                cert.min_same_color = dist;
                cert.nearest = cell;
            }
        }
    }
    // Unswept centers lie at least 1.5*(R+1)*side away; their tiles are at
    // least that minus two circumradii away.
    const double unswept_bound = 1.5 * (search_radius + 1) * side - 2.0 * side;
    if (!(unswept_bound > cert.min_same_color)) {
        throw RadiusError("certify: search radius " + std::to_string(search_radius) +
                          " cannot rule out closer same-colored tiles");
    }
    cert.admissible_ratio = cert.min_same_color / cert.max_intra_tile;
    return cert;
}

ProperVerdict proper_for(const IntervalSpec& spec, double side) {
    ProperVerdict v;
    v.certificate = certify(side, 4);
    v.proper = v.certificate.max_intra_tile < 1.0 && v.certificate.min_same_color > spec.d();
    return v;
}

double automatic_side(double d) {
    const double lo = d / std::sqrt(7.0);
    if (!(lo < 0.5)) throw DomainError("automatic_side: no tile size separates [1, d] for d >= sqrt(7)/2");
    return (lo + 0.5) / 2.0;
}

std::string certificate_text(const TilingCertificate& cert) {
    std::ostringstream out;
    out.precision(12);
    out << "side: " << cert.side << "\n"
        << "search_radius: " << cert.search_radius << "\n"
        << "origin_color: " << seven_coloring(cert.origin) << "\n"
        << "nearest_same_color_cell: (" << cert.nearest.q - cert.origin.q << "," << cert.nearest.r - cert.origin.r
        << ")\n"
        << "max_intra_tile: " << cert.max_intra_tile << "\n"
        << "min_same_color: " << cert.min_same_color << "\n"
        << "admissible_ratio: " << cert.admissible_ratio << "\n";
    return out.str();
}

std::string tiling_svg(double side, int radius) {
    if (radius < 0) throw DomainError("tiling_svg: radius must be nonnegative");
    const double extent = side * (1.5 * radius + 1.2) * 1.2;
    constexpr double kSize = 480.0;
    const double scale = kSize / (2.0 * extent);
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int q = -radius; q <= radius; ++q) {
        for (int r = -radius; r <= radius; ++r) {
            const HexCell cell{q, r};
            if (hex_distance(cell, {}) > radius) continue;
            out << "<polygon points=\"";
            for (const Point2& p : hexagon_polygon(cell, side).vertices()) {
                out << kSize / 2 + p.x * scale << ',' << kSize / 2 - p.y * scale << ' ';
            }
            out << "\" fill=\"" << svg_color(seven_coloring(cell)) << "\" stroke=\"white\" stroke-width=\"1\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace chroma
