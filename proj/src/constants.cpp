#include "chroma/constants.hpp"

namespace chroma {

std::vector<NamedConstant> constant_registry() {
    using std::numbers::pi;
    return {
        {"isbell_upper", "sqrt(7)/2", std::sqrt(7.0) / 2.0, 1.322876, "hexagonal 7-coloring upper bound"},
        {"exoo_203", "sqrt(43/25)", std::sqrt(43.0 / 25.0), 1.311488, "203-vertex 7-chromatic graph"},
        {"two_ring_29", "2 sin(5 pi/22)", 2.0 * std::sin(5.0 * pi / 22.0), 1.309721, "29-vertex two-ring graph"},
        {"wesek_2601", "", std::nullopt, 1.285987, "2601-vertex annulus graph (decimal only)"},
        {"rim18_chord", "2 sin(2 pi/9)", 2.0 * std::sin(2.0 * pi / 9.0), 1.285575, "19-vertex graph"},
    };
}

}  // namespace chroma
