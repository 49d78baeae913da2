#pragma once

#include <compare>
#include <string>

#include "chroma/geometry.hpp"

namespace chroma {

// Axial coordinates of a pointy-top hexagonal cell. Neighbors differ by
// (+-1,0), (0,+-1), (1,-1), (-1,1).
struct HexCell {
    int q = 0;
    int r = 0;

    friend auto operator<=>(const HexCell&, const HexCell&) = default;
};

HexCell operator+(HexCell a, HexCell b);
int hex_distance(HexCell a, HexCell b);

// Center of the cell for hexagons of circumradius `side`; adjacent centers are
// side*sqrt(3) apart.
Point2 hex_center(HexCell cell, double side);

ConvexPolygon hexagon_polygon(HexCell cell, double side);

/// color = (q + 3r) mod 7. Same-colored cells form the index-7 sublattice
/// spanned by (1,2) and (-3,1), of minimal center distance sqrt(21)*side.
int seven_coloring(HexCell cell);

/// True iff every cell together with its six neighbors sees all seven colors
/// (checked on one cell; the coloring is translation-equivariant).
bool seven_coloring_is_valid();

struct TilingCertificate {
    double side = 0.0;
    int search_radius = 0;
    HexCell origin;
    HexCell nearest;              // a closest same-colored cell
    double max_intra_tile = 0.0;  // tile diameter, 2*side
    double min_same_color = 0.0;  // exact polygon distance to the nearest same-colored tile
    double admissible_ratio = 0.0;
};

/// Sweeps all same-colored cells within `search_radius` (hex distance) of
/// `origin`. Throws RadiusError unless every unswept cell is provably farther
/// than the minimum found.
TilingCertificate certify(double side, int search_radius, HexCell origin = {});

struct ProperVerdict {
    bool proper = false;
    TilingCertificate certificate;
};

/// Strict check: tile diameter < 1 and same-color separation > d.
ProperVerdict proper_for(const IntervalSpec& spec, double side);

/// Midpoint of the admissible side range (d/sqrt(7), 1/2). Throws DomainError
/// when d >= sqrt(7)/2.
double automatic_side(double d);

std::string certificate_text(const TilingCertificate& cert);
std::string tiling_svg(double side, int radius);

}  // namespace chroma
