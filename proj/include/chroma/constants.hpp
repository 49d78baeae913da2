#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

namespace chroma {

// Step-4 chord of the unit 18-gon; lower end of the interval where the
// 19-vertex construction works.
inline double rim_chord_bound() { return 2.0 * std::sin(2.0 * std::numbers::pi / 9.0); }

// Same-color separation over tile diameter for the hexagonal 7-coloring.
inline double hex_tiling_bound() { return std::sqrt(7.0) / 2.0; }

struct NamedConstant {
    std::string_view name;
    std::string_view closed_form;        // empty when only a decimal is known
    std::optional<double> value;         // closed-form evaluation
    double quoted;                       // published six-decimal value
    std::string_view source;

    // |value - quoted|; nullopt for reference-only entries.
    std::optional<double> mismatch() const {
        if (!value) return std::nullopt;
        return std::abs(*value - quoted);
    }
};

std::vector<NamedConstant> constant_registry();

}  // namespace chroma
