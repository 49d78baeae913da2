#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace chroma {

class GeometricGraph;

inline constexpr int kMaxColors = 32;

// Set of color indices in [0, 32). Ordered lexicographically as sorted lists,
// so {0,2} < {1}.
class ColorSet {
public:
    constexpr ColorSet() = default;
    constexpr explicit ColorSet(std::uint32_t mask) : mask_(mask) {}
    ColorSet(std::initializer_list<int> colors);

    static ColorSet range(int first, int count);

    constexpr std::uint32_t mask() const noexcept { return mask_; }
    constexpr int size() const noexcept { return std::popcount(mask_); }
    constexpr bool empty() const noexcept { return mask_ == 0; }
    constexpr bool contains(int c) const noexcept { return (mask_ >> c) & 1U; }
    constexpr bool intersects(ColorSet o) const noexcept { return (mask_ & o.mask_) != 0; }
    constexpr int min() const noexcept { return std::countr_zero(mask_); }

    void insert(int c) { mask_ |= (1U << c); }
    std::vector<int> colors() const;

    friend constexpr ColorSet operator|(ColorSet a, ColorSet b) { return ColorSet(a.mask_ | b.mask_); }
    friend constexpr ColorSet operator&(ColorSet a, ColorSet b) { return ColorSet(a.mask_ & b.mask_); }
    friend constexpr bool operator==(ColorSet, ColorSet) = default;
    friend std::strong_ordering operator<=>(ColorSet a, ColorSet b);

private:
    std::uint32_t mask_ = 0;
};

using SetColoring = std::vector<ColorSet>;

/// First violated invariant of `c` as a proper set-coloring of `g`, or
/// nullopt when proper: sizes match demands and adjacent sets are disjoint.
std::optional<std::string> coloring_violation(const GeometricGraph& g, const SetColoring& c);

inline bool is_proper(const GeometricGraph& g, const SetColoring& c) { return !coloring_violation(g, c); }

// Union of all color sets.
ColorSet palette_of(const SetColoring& c);

std::string to_string(ColorSet s);

}  // namespace chroma
