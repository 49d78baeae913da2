#include "chroma/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chroma/errors.hpp"

namespace chroma {

namespace {

void check_k(int k) {
    if (k < 0 || k > kMaxColors) throw DomainError("solver: k = " + std::to_string(k) + " outside [0, 32]");
}

// Calls f(subset) for every `size`-subset of `from`, in lexicographic order of
// the sorted subsets. Stops and returns true when f returns true.
template <typename F>
bool for_each_subset(const std::vector<int>& from, int size, F&& f) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    const int m = static_cast<int>(from.size());
    if (size > m) return false;
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        ColorSet s;
        for (int i : idx) s.insert(from[static_cast<std::size_t>(i)]);
        if (f(s)) return true;
        int i = size - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - size + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

class FeasibilitySearch {
public:
    FeasibilitySearch(const GeometricGraph& g, int k)
        : g_(g), k_(k), n_(static_cast<int>(g.size())), assigned_(g.size()), forbidden_(g.size()),
          done_(g.size(), false) {}

    std::optional<SetColoring> run() {
        for (int v = 0; v < n_; ++v) {
            if (g_.demand(v) > k_) return std::nullopt;
        }
        if (dfs(n_)) return assigned_;
        return std::nullopt;
    }

private:
    int pick() const {
        int best = -1;
        auto key = [&](int v) {
            return std::tuple(forbidden_[static_cast<std::size_t>(v)].size() + g_.demand(v), g_.demand(v), g_.degree(v));
        };
        for (int v = 0; v < n_; ++v) {
            if (done_[static_cast<std::size_t>(v)]) continue;
            if (best < 0 || key(v) > key(best)) best = v;
        }
        return best;
    }

    bool dfs(int remaining) {
        if (remaining == 0) return true;
        const int v = pick();
        const int demand = g_.demand(v);
        std::vector<int> old_avail;
        for (int c = 0; c < used_; ++c) {
            if (!forbidden_[static_cast<std::size_t>(v)].contains(c)) old_avail.push_back(c);
        }
        const int fresh = k_ - used_;
        for (int j = 0; j <= std::min(demand, fresh); ++j) {
            const ColorSet fresh_set = ColorSet::range(used_, j);
            const bool found = for_each_subset(old_avail, demand - j, [&](ColorSet reused) {
                return try_assign(v, reused | fresh_set, j, remaining);
            });
            if (found) return true;
        }
        return false;
    }

    bool try_assign(int v, ColorSet s, int fresh, int remaining) {
        const auto nbrs = g_.neighbors(v);
        std::vector<ColorSet> saved;
        saved.reserve(nbrs.size());
        bool ok = true;
        for (int u : nbrs) {
            auto& f = forbidden_[static_cast<std::size_t>(u)];
            saved.push_back(f);
            f = f | s;
            if (!done_[static_cast<std::size_t>(u)] && k_ - f.size() < g_.demand(u)) ok = false;
        }
        if (ok) {
            assigned_[static_cast<std::size_t>(v)] = s;
            done_[static_cast<std::size_t>(v)] = true;
            used_ += fresh;
            if (dfs(remaining - 1)) return true;
            used_ -= fresh;
            done_[static_cast<std::size_t>(v)] = false;
        }
        for (std::size_t i = 0; i < nbrs.size(); ++i) forbidden_[static_cast<std::size_t>(nbrs[i])] = saved[i];
        return false;
    }

    const GeometricGraph& g_;
    int k_;
    int n_;
    int used_ = 0;
    SetColoring assigned_;
    std::vector<ColorSet> forbidden_;
    std::vector<bool> done_;
};

class Enumerator {
public:
    Enumerator(const GeometricGraph& g, int k, const std::function<bool(const SetColoring&)>& visit)
        : g_(g), k_(k), n_(static_cast<int>(g.size())), visit_(visit), current_(g.size()) {}

    void run() { dfs(0); }

private:
    // Returns false once the visitor asked to stop.
    bool dfs(int v) {
        if (v == n_) return visit_(current_);
        ColorSet blocked;
        for (int u : g_.neighbors(v)) {
            if (u < v) blocked = blocked | current_[static_cast<std::size_t>(u)];
        }
        std::vector<int> allowed;
        for (int c = 0; c < k_; ++c) {
            if (!blocked.contains(c)) allowed.push_back(c);
        }
        bool keep_going = true;
        for_each_subset(allowed, g_.demand(v), [&](ColorSet s) {
            current_[static_cast<std::size_t>(v)] = s;
            if (!lookahead(v)) return false;
            keep_going = dfs(v + 1);
            return !keep_going;
        });
        current_[static_cast<std::size_t>(v)] = ColorSet();
        return keep_going;
    }

    // Every later neighbor of v must still have enough colors left.
    bool lookahead(int v) const {
        for (int u : g_.neighbors(v)) {
            if (u <= v) continue;
            ColorSet blocked;
            for (int w : g_.neighbors(u)) {
                if (w <= v) blocked = blocked | current_[static_cast<std::size_t>(w)];
            }
            if (k_ - blocked.size() < g_.demand(u)) return false;
        }
        return true;
    }

    const GeometricGraph& g_;
    int k_;
    int n_;
    const std::function<bool(const SetColoring&)>& visit_;
    SetColoring current_;
};

using VertexMap = std::vector<int>;

bool invariant_under(const GeometricGraph& g, const VertexMap& sigma) {
    for (const auto& [u, v] : g.edges()) {
        if (!g.has_edge(sigma[static_cast<std::size_t>(u)], sigma[static_cast<std::size_t>(v)])) return false;
    }
    return true;
}

}  // namespace

std::optional<SetColoring> feasible(const GeometricGraph& g, int k) {
    check_k(k);
    return FeasibilitySearch(g, k).run();
}

int chromatic_number(const GeometricGraph& g, int kmax) {
    check_k(kmax);
    const auto demands = g.demands();
    const int lower = demands.empty() ? 0 : *std::max_element(demands.begin(), demands.end());
    for (int k = lower; k <= kmax; ++k) {
        if (feasible(g, k)) return k;
    }
    throw SearchExhausted("chromatic_number: no feasible coloring with at most " + std::to_string(kmax) + " colors");
}

void for_each_coloring(const GeometricGraph& g, int k, const std::function<bool(const SetColoring&)>& visit) {
    check_k(k);
    if (k >= 2 && g.total_demand() * std::log2(static_cast<double>(k)) > kEnumerationGuardLog2) {
        throw SearchRefused("enumerate_colorings: k^(total demand) = " + std::to_string(k) + "^" +
                            std::to_string(g.total_demand()) + " exceeds 2^40");
    }
    Enumerator(g, k, visit).run();
}

std::vector<SetColoring> enumerate_colorings(const GeometricGraph& g, int k) {
    std::vector<SetColoring> out;
    for_each_coloring(g, k, [&](const SetColoring& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

std::string ColoringClass::descriptor() const {
    std::string out;
    for (auto it = run_profile.rbegin(); it != run_profile.rend(); ++it) {
        if (!out.empty()) out += "+";
        out += std::to_string(it->first) + "×" + std::to_string(it->second);
    }
    return out;
}

std::map<int, int> run_profile(const SetColoring& c) {
    std::map<int, int> profile;
    const int n = static_cast<int>(c.size());
    if (n == 0) return profile;
    int start = -1;
    for (int i = 0; i < n; ++i) {
        if (c[static_cast<std::size_t>(i)] != c[static_cast<std::size_t>((i + n - 1) % n)]) {
            start = i;
            break;
        }
    }
    if (start < 0) {
        profile[n] = 1;
        return profile;
    }
    int len = 0;
    for (int step = 0; step < n; ++step) {
        const int i = (start + step) % n;
        ++len;
        const int next = (i + 1) % n;
        if (c[static_cast<std::size_t>(next)] != c[static_cast<std::size_t>(i)]) {
            ++profile[len];
            len = 0;
        }
    }
    return profile;
}

std::vector<ColoringClass> classify_colorings(const GeometricGraph& g, std::span<const SetColoring> colorings, int k,
                                              SymmetryGroup group) {
    const int n = static_cast<int>(g.size());
    std::vector<VertexMap> spatial;
    VertexMap id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    spatial.push_back(id);
    if (group.rotation || group.reflection) {
        VertexMap rot(static_cast<std::size_t>(n)), ref(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            rot[static_cast<std::size_t>(i)] = (i + 1) % n;
            ref[static_cast<std::size_t>(i)] = (n - i) % n;
        }
        if (group.rotation && !invariant_under(g, rot)) {
            throw DomainError("classify_colorings: graph is not invariant under rotation (not a circulant)");
        }
        if (group.reflection && !invariant_under(g, ref)) {
            throw DomainError("classify_colorings: graph is not invariant under reflection");
        }
        spatial.clear();
        const int rotations = group.rotation ? n : 1;
        for (int r = 0; r < rotations; ++r) {
            VertexMap m(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = (i + r) % n;
            spatial.push_back(m);
            if (group.reflection) {
                VertexMap mr(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) mr[static_cast<std::size_t>(i)] = (n - i + r) % n;
                spatial.push_back(mr);
            }
        }
    }
    std::vector<std::vector<int>> color_maps;
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    if (group.color_permutation) {
        if (k > 8) throw DomainError("classify_colorings: color permutations supported for k <= 8");
        do color_maps.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        color_maps.push_back(perm);
    }

    auto apply = [&](const SetColoring& c, const VertexMap& sigma, const std::vector<int>& pi) {
        SetColoring out(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            ColorSet s;
            for (int col : c[i].colors()) s.insert(col < k ? pi[static_cast<std::size_t>(col)] : col);
            out[static_cast<std::size_t>(sigma[i])] = s;
        }
        return out;
    };

    std::map<SetColoring, ColoringClass> classes;
    for (const SetColoring& c : colorings) {
        if (static_cast<int>(c.size()) != n) throw DomainError("classify_colorings: coloring size mismatch");
        std::set<SetColoring> orbit;
        for (const auto& sigma : spatial)
            for (const auto& pi : color_maps) orbit.insert(apply(c, sigma, pi));
        const SetColoring& rep = *orbit.begin();
        auto [it, inserted] = classes.try_emplace(rep);
        if (inserted) {
            it->second.representative = rep;
            it->second.orbit_size = orbit.size();
            it->second.run_profile = run_profile(rep);
        }
        ++it->second.members;
    }
    std::vector<ColoringClass> out;
    for (auto& [rep, cls] : classes) out.push_back(std::move(cls));
    return out;
}

bool bichromatic_extension_check(const GeometricGraph& g, const SetColoring& c, int v) {
    if (c.size() != g.size()) throw DomainError("bichromatic_extension_check: coloring size mismatch");
    if (v < 0 || v >= static_cast<int>(g.size())) throw DomainError("bichromatic_extension_check: vertex out of range");
    for (ColorSet s : c) {
        if (s.size() != 1) throw DomainError("bichromatic_extension_check: expected one color per vertex");
    }
    for (const auto& [a, b] : g.edges()) {
        if (c[static_cast<std::size_t>(a)].intersects(c[static_cast<std::size_t>(b)])) {
            throw DomainError("bichromatic_extension_check: input coloring is not proper");
        }
    }
    ColorSet blocked = c[static_cast<std::size_t>(v)];
    for (int u : g.neighbors(v)) blocked = blocked | c[static_cast<std::size_t>(u)];
    return (palette_of(c).mask() & ~blocked.mask()) != 0;
}

bool verify_reduction(const std::set<int>& removed_labels) {
    const GeometricGraph full = build_paper19(1.30);
    std::set<int> removed;
    for (int label : removed_labels) {
        if (label < 2 || label > 18) {
            throw DomainError("verify_reduction: label " + std::to_string(label) +
                              " is not a removable rim vertex (2..18)");
        }
        removed.insert(full.index_of_label(label));
    }
    const GeometricGraph reduced = full.without_vertices(removed);
    return !feasible(reduced, 6) && feasible(reduced, 7).has_value();
}

}  // namespace chroma
