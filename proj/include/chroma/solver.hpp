#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "chroma/coloring.hpp"
#include "chroma/graph.hpp"

namespace chroma {

/// Exact set-coloring feasibility with colors {0..k-1}: every vertex v gets
/// demand(v) colors, adjacent sets disjoint. Complete branch-and-bound search;
/// vertices picked by saturation, unused colors treated as interchangeable.
/// Throws DomainError for k outside [0, 32].
std::optional<SetColoring> feasible(const GeometricGraph& g, int k);

/// Least feasible k <= kmax. Throws SearchExhausted if none.
int chromatic_number(const GeometricGraph& g, int kmax = kMaxColors);

/// Upper limit on k^(total demand) accepted by the enumerators.
inline constexpr double kEnumerationGuardLog2 = 40.0;

/// Visits every proper set-coloring with colors drawn from {0..k-1} exactly
/// once, in lexicographic order (vertex by vertex, sets as sorted lists).
/// Return false from `visit` to stop early. Throws SearchRefused when
/// k^(total demand) exceeds 2^40.
void for_each_coloring(const GeometricGraph& g, int k, const std::function<bool(const SetColoring&)>& visit);

std::vector<SetColoring> enumerate_colorings(const GeometricGraph& g, int k);

struct SymmetryGroup {
    bool rotation = false;
    bool reflection = false;
    bool color_permutation = false;

    static SymmetryGroup full() { return {true, true, true}; }
    static SymmetryGroup colors_only() { return {false, false, true}; }
};

struct ColoringClass {
    SetColoring representative;  // lexicographically least element of the orbit
    std::size_t orbit_size = 0;  // distinct images under the group
    std::size_t members = 0;     // input colorings falling in this class
    std::map<int, int> run_profile;  // run length -> number of runs around the cycle

    // e.g. "3×6" for six runs of length three.
    std::string descriptor() const;
};

/// Cyclic runs of identical color sets in index order.
std::map<int, int> run_profile(const SetColoring& c);

/// Partitions colorings of `g` (drawn from {0..k-1}) into orbits of the
/// chosen group. Rotation/reflection act on vertex indices and require `g` to
/// be invariant under them (a circulant); otherwise DomainError.
std::vector<ColoringClass> classify_colorings(const GeometricGraph& g, std::span<const SetColoring> colorings, int k,
                                              SymmetryGroup group);

/// True iff some color already used somewhere in `c`, absent from v's set and
/// from every neighbor's set, could be added at v. Requires a proper coloring
/// with one color per vertex.
bool bichromatic_extension_check(const GeometricGraph& g, const SetColoring& c, int v);

/// Removes the given rim labels (2..18) from the 19-vertex graph and reports
/// whether its chromatic number is still 7.
bool verify_reduction(const std::set<int>& removed_labels);

}  // namespace chroma
