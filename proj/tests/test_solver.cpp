#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>

#include "chroma/errors.hpp"
#include "chroma/solver.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace chroma;

namespace {

GeometricGraph from_plain(const oracle::Graph& g) {
    std::vector<int> demands = g.demands;
    if (demands.empty()) demands.assign(static_cast<std::size_t>(g.n), 1);
    return GeometricGraph(static_cast<std::size_t>(g.n), g.edges, demands);
}

oracle::Graph random_graph(std::mt19937& rng, int n, double p, int max_demand) {
    std::bernoulli_distribution edge(p);
    std::uniform_int_distribution<int> dem(1, max_demand);
    oracle::Graph g{n, {}, {}};
    for (int i = 0; i < n; ++i) {
        g.demands.push_back(dem(rng));
        for (int j = i + 1; j < n; ++j)
            if (edge(rng)) g.edges.emplace_back(i, j);
    }
    return g;
}

// Brute-force count of set colorings: every vertex picks any subset of the
// right size, then edges are checked.
std::size_t brute_count(const oracle::Graph& g, int k) {
    std::vector<std::vector<unsigned>> choices(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
        const int m = g.demands.empty() ? 1 : g.demands[v];
        for (unsigned mask = 0; mask < (1U << k); ++mask)
            if (__builtin_popcount(mask) == m) choices[v].push_back(mask);
    }
    std::vector<unsigned> pick(static_cast<std::size_t>(g.n));
    std::size_t count = 0;
    std::function<void(int)> go = [&](int v) {
        if (v == g.n) {
            for (auto [a, b] : g.edges)
                if (pick[a] & pick[b]) return;
            ++count;
            return;
        }
        for (unsigned m : choices[v]) {
            pick[v] = m;
            go(v + 1);
        }
    };
    go(0);
    return count;
}

std::vector<oracle::Graph> corpus() {
    std::vector<oracle::Graph> out = {oracle::complete(5), oracle::cycle(5), oracle::cycle(6), oracle::petersen(),
                                      oracle::circulant(18, {3, 4}), oracle::circulant(9, {1, 2})};
    std::mt19937 rng(2024);
    for (int i = 0; i < 40; ++i) {
        const int n = 3 + i % 8;
        out.push_back(random_graph(rng, n, 0.2 + 0.05 * (i % 10), i % 3 + 1));
    }
    return out;
}

}  // namespace

TEST_CASE("textbook chromatic numbers") {
    CHECK(chromatic_number(from_plain(oracle::complete(5))) == 5);
    CHECK(chromatic_number(from_plain(oracle::cycle(5))) == 3);
    CHECK(chromatic_number(from_plain(oracle::petersen())) == 3);
    CHECK(chromatic_number(build_rim18()) == 3);
    for (const auto& g : {oracle::complete(5), oracle::cycle(5), oracle::petersen(), oracle::circulant(18, {3, 4})})
        CHECK(chromatic_number(from_plain(g)) == oracle::chromatic_number(g));
}

TEST_CASE("lower bound chain") {
    CHECK(!feasible(build_rim18(), 2));
    CHECK(feasible(build_rim18(), 3));
    CHECK(chromatic_number(build_rim18_with_demand(1, 2)) == 4);
    const GeometricGraph g = build_paper19(1.3);
    CHECK(!feasible(g, 6));
    CHECK(chromatic_number(g) == 7);
    CHECK(oracle::set_chromatic_number(test::plain(build_rim18_with_demand(1, 2))) == 4);
}

TEST_CASE("simplex instances need the sum of their demands") {
    for (int n = 0; n <= 4; ++n) {
        const GeometricGraph g = simplex_instance(n);
        CHECK(chromatic_number(g) == (n + 1) * (n + 2) / 2);
        CHECK(chromatic_number(g) == g.total_demand());
        CHECK(oracle::set_chromatic_number(test::plain(g)) == (n + 1) * (n + 2) / 2);
    }
}

TEST_CASE("solver agrees with the oracles") {
    for (const oracle::Graph& og : corpus()) {
        const GeometricGraph g = from_plain(og);
        const int chi = chromatic_number(g);
        CHECK(chi == oracle::set_chromatic_number(og));
        bool seen_feasible = false;
        for (int k = 0; k <= chi + 1; ++k) {
            const auto w = feasible(g, k);
            CHECK(w.has_value() == (k >= chi));
            // Monotone in k.
            if (seen_feasible) CHECK(w.has_value());
            seen_feasible = seen_feasible || w.has_value();
            if (w) {
                CHECK(oracle::split_check(og, test::sets(*w)));
                CHECK(is_proper(g, *w));
                for (ColorSet s : *w) CHECK((s.empty() || s.colors().back() < k));
            }
            if (g.total_demand() <= 24 && g.total_demand() * std::log2(std::max(k, 1)) <= kEnumerationGuardLog2) {
                CHECK(!enumerate_colorings(g, k).empty() == w.has_value());
            }
        }
    }
}

TEST_CASE("enumeration counts match brute force") {
    std::mt19937 rng(99);
    for (int i = 0; i < 25; ++i) {
        const oracle::Graph og = random_graph(rng, 3 + i % 4, 0.4, 2);
        const GeometricGraph g = from_plain(og);
        for (int k = 1; k <= 4; ++k) {
            const auto all = enumerate_colorings(g, k);
            CHECK(all.size() == brute_count(og, k));
            CHECK(std::is_sorted(all.begin(), all.end()));
            for (const auto& c : all) CHECK(oracle::split_check(og, test::sets(c)));
        }
    }
}

TEST_CASE("rim 3-colorings") {
    const auto all = enumerate_colorings(build_rim18(), 3);
    const auto words = oracle::rim_3colorings();
    CHECK(all.size() == words.size());
    CHECK(all.size() == 30);  // frozen regression value
    std::set<std::string> mine;
    for (const auto& c : all) {
        std::string w;
        for (ColorSet s : c) w += static_cast<char>('0' + s.min());
        mine.insert(w);
    }
    CHECK(mine == std::set<std::string>(words.begin(), words.end()));
    CHECK(enumerate_colorings(circulant({5, {1}}), 2).empty());
}

TEST_CASE("classification of rim 3-colorings") {
    const GeometricGraph g = build_rim18();
    const auto all = enumerate_colorings(g, 3);
    const auto classes = classify_colorings(g, all, 3, SymmetryGroup::full());
    REQUIRE(classes.size() == 2);
    std::set<std::string> descriptors;
    std::size_t members = 0;
    for (const auto& c : classes) {
        descriptors.insert(c.descriptor());
        members += c.members;
        CHECK(c.orbit_size == c.members);
    }
    CHECK(descriptors == std::set<std::string>{"3×6", "2×9"});
    CHECK(members == all.size());

    std::set<std::string> canon;
    for (const auto& w : oracle::rim_3colorings()) canon.insert(oracle::rim_canonical(w));
    CHECK(canon.size() == 2);

    const auto by_color = classify_colorings(g, all, 3, SymmetryGroup::colors_only());
    CHECK(by_color.size() == all.size() / 6);
    CHECK(classify_colorings(g, {}, 3, SymmetryGroup::full()).empty());
    CHECK_THROWS_AS(classify_colorings(build_paper19(1.3), {}, 7, SymmetryGroup::full()), DomainError);
}

TEST_CASE("run profiles") {
    SetColoring c;
    for (int i = 0; i < 18; ++i) c.push_back(ColorSet{(i / 3) % 3});
    CHECK(run_profile(c) == std::map<int, int>{{3, 6}});
    // A run wrapping around the end of the cycle.
    SetColoring d;
    for (int i = 0; i < 18; ++i) d.push_back(ColorSet{((i + 1) / 2) % 3});
    CHECK(run_profile(d) == std::map<int, int>{{2, 9}});
}

TEST_CASE("bi-chromatic extension") {
    const GeometricGraph g = build_rim18();
    for (const auto& c : enumerate_colorings(g, 3))
        for (int v = 0; v < 18; ++v) CHECK(!bichromatic_extension_check(g, c, v));
    const GeometricGraph isolated(2, {}, {1, 1});
    CHECK(bichromatic_extension_check(isolated, {ColorSet{0}, ColorSet{1}}, 0));
    const GeometricGraph path(2, {{0, 1}}, {1, 1});
    CHECK(!bichromatic_extension_check(path, {ColorSet{0}, ColorSet{1}}, 0));
    CHECK(!bichromatic_extension_check(path, {ColorSet{0}, ColorSet{1}}, 1));
    CHECK_THROWS_AS(bichromatic_extension_check(path, {ColorSet{0}, ColorSet{0}}, 0), DomainError);
}

TEST_CASE("redundant rim pairs") {
    CHECK(verify_reduction({2, 18}));
    CHECK(verify_reduction({2, 6}));
    CHECK(verify_reduction({8, 12}));
    CHECK(verify_reduction({14, 18}));
    CHECK(verify_reduction({7, 11}) == false);  // frozen regression value
    CHECK_THROWS_AS(verify_reduction({1, 5}), DomainError);
    CHECK_THROWS_AS(verify_reduction({19}), DomainError);
}

TEST_CASE("solver errors") {
    CHECK_THROWS_AS(feasible(build_rim18(), 33), DomainError);
    CHECK_THROWS_AS(feasible(build_rim18(), -1), DomainError);
    CHECK_THROWS_AS(chromatic_number(build_paper19(1.3), 6), SearchExhausted);
    CHECK_THROWS_AS(enumerate_colorings(build_paper19(1.3), 7), SearchRefused);
    CHECK(!feasible(simplex_instance(1), 2));
    CHECK(feasible(GeometricGraph(0, {}, {}), 0));
}
