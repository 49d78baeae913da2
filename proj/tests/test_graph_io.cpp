#include <filesystem>
#include <string>

#include "chroma/errors.hpp"
#include "chroma/graph_io.hpp"
#include "chroma/solver.hpp"
#include "doctest.h"

using namespace chroma;

namespace {

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "chroma_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("json round trip of shipped instances") {
    const std::vector<GeometricGraph> graphs = {build_rim18(),         build_rim18_with_demand(1, 2),
                                                build_paper19(1.3),    build_paper19(1.286),
                                                circulant({18, {3, 4}}), simplex_instance(2),
                                                simplex_instance(5)};
    for (const GeometricGraph& g : graphs) {
        CHECK(graph_from_json(graph_to_json(g)) == g);
        const auto path = scratch("roundtrip.json");
        save_graph(g, path);
        CHECK(load_graph(path) == g);
    }
}

TEST_CASE("edges are derived from geometry when omitted") {
    const std::string doc = R"({
  "version": 1,
  "points": [[0, 0], [1, 0], [0.5, 0.8660254037844386]],
  "interval": {"d": 1.2}
})";
    const GeometricGraph g = graph_from_json(doc);
    CHECK(g.edges().size() == 3);
    CHECK(g.demand(2) == 1);
}

TEST_CASE("self-loops are rejected") {
    const std::string doc = "{\n \"version\": 1,\n \"demands\": [1, 1],\n \"edges\": [[1, 1]]\n}";
    try {
        graph_from_json(doc);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.field() == "edges[0]");
        CHECK(e.line() == 4);
        CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
    }
}

TEST_CASE("parse diagnostics name line and field") {
    SUBCASE("syntax error") {
        try {
            graph_from_json("{\n \"version\": 1,\n \"demands\": [1, 1,\n}");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 4);
        }
    }
    SUBCASE("wrong type") {
        try {
            graph_from_json("{\n \"version\": 1,\n \"demands\": [1, \"two\"]\n}");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.field() == "demands[1]");
            CHECK(e.line() == 3);
        }
    }
    SUBCASE("out of range edge") {
        CHECK_THROWS_AS(graph_from_json(R"({"version": 1, "demands": [1, 1], "edges": [[0, 5]]})"), ParseError);
    }
    SUBCASE("missing version") { CHECK_THROWS_AS(graph_from_json(R"({"demands": [1]})"), ParseError); }
    SUBCASE("future version") { CHECK_THROWS_AS(graph_from_json(R"({"version": 2, "demands": [1]})"), ParseError); }
    SUBCASE("missing edges without geometry") {
        CHECK_THROWS_AS(graph_from_json(R"({"version": 1, "demands": [1]})"), ParseError);
    }
    SUBCASE("non-finite point") {
        CHECK_THROWS_AS(graph_from_json(R"({"version": 1, "points": [[0, 1e999]], "edges": []})"), ParseError);
    }
}

TEST_CASE("loaded geometry is re-validated") {
    // Unit distance listed as a non-edge.
    CHECK_THROWS_AS(
        graph_from_json(R"({"version": 1, "points": [[0, 0], [1, 0]], "edges": [], "interval": {"d": 1.2}})"),
        ValidationError);
    // A pair sitting in the ambiguity shell.
    CHECK_THROWS_AS(graph_from_json(
                        R"({"version": 1, "points": [[0, 0], [1.0000005, 0]], "edges": [[0, 1]], "interval": {"d": 1.2}})"),
                    ValidationError);
    CHECK_THROWS_AS(graph_from_json(R"({"version": 1, "points": [[0, 0], [1.0000005, 0]], "interval": {"d": 1.2}})"),
                    ValidationError);
}

TEST_CASE("coloring documents") {
    const auto all = enumerate_colorings(circulant({6, {1}}), 2);
    REQUIRE(all.size() == 2);
    CHECK(colorings_from_json(colorings_to_json(all)) == all);
    CHECK_THROWS_AS(colorings_from_json(R"({"colorings": [[[0, 40]]]})"), ParseError);
    CHECK_THROWS_AS(colorings_from_json(R"({"colorings": 3})"), ParseError);
}

TEST_CASE("dot output") {
    const std::string dot = graph_to_dot(circulant({18, {3, 4}}));
    std::size_t edges = 0;
    for (std::size_t pos = dot.find("--"); pos != std::string::npos; pos = dot.find("--", pos + 2)) ++edges;
    CHECK(edges == 36);
    CHECK(dot.rfind("graph", 0) == 0);
    const std::string dot19 = graph_to_dot(build_paper19(1.3));
    CHECK(dot19.find("demand=3") != std::string::npos);
}

TEST_CASE("svg output") {
    const GeometricGraph g = build_paper19(1.3);
    const auto witness = feasible(g, 7);
    REQUIRE(witness);
    const std::string svg = graph_to_svg(g, &*witness);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    for (int c = 0; c < 7; ++c) CHECK(svg.find(std::string(svg_color(c))) != std::string::npos);
    // Deterministic output.
    CHECK(graph_to_svg(g, &*witness) == svg);
    CHECK(graph_to_svg(circulant({5, {1}})).find("<line") != std::string::npos);
}
