#include <filesystem>
#include <sstream>

#include "chroma/cli.hpp"
#include "chroma/graph_io.hpp"
#include "doctest.h"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = chroma::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "chroma_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("graph build") {
    const Result dot = run({"graph", "build", "circulant", "18", "3,4", "--format", "dot"});
    CHECK(dot.code == 0);
    std::size_t edges = 0;
    for (std::size_t pos = dot.out.find("--"); pos != std::string::npos; pos = dot.out.find("--", pos + 2)) ++edges;
    CHECK(edges == 36);

    const Result simplex = run({"graph", "build", "simplex", "2"});
    CHECK(simplex.code == 0);
    const chroma::GeometricGraph k3 = chroma::graph_from_json(simplex.out);
    CHECK(std::vector<int>(k3.demands().begin(), k3.demands().end()) == std::vector<int>{3, 2, 1});

    const auto svg_path = scratch("fig1.svg");
    const Result svg = run({"graph", "build", "paper19", "--d", "1.30", "--format", "svg", "--out", svg_path.string()});
    CHECK(svg.code == 0);
    CHECK(chroma::read_text_file(svg_path).rfind("<svg", 0) == 0);

    const auto json_path = scratch("rim.json");
    CHECK(run({"graph", "build", "rim18", "--out", json_path.string()}).code == 0);
    const Result from_file = run({"solve", "chromatic", json_path.string()});
    CHECK(from_file.code == 0);
    CHECK(from_file.out == "3\n");

    CHECK(run({"graph", "build", "paper19", "--d", "1.40"}).code == 2);
    CHECK(run({"graph", "build", "paper19", "--eps", "0.13"}).code == 0);
    CHECK(run({"graph", "build", "nonsense"}).code == 2);
    CHECK(run({"graph", "build", "rim18", "--format", "png"}).code == 2);
}

TEST_CASE("solve") {
    CHECK(run({"solve", "chromatic", "paper19"}).out == "7\n");
    CHECK(run({"solve", "chromatic", "rim18+bi1"}).out == "4\n");
    const Result classes = run({"solve", "classify", "rim18", "--k", "3"});
    CHECK(classes.code == 0);
    CHECK(has(classes.out, "2 classes"));
    CHECK(has(classes.out, "six triples"));
    CHECK(has(classes.out, "nine pairs"));
    const Result infeasible = run({"solve", "feasible", "paper19", "--k", "6"});
    CHECK(infeasible.code == 1);
    CHECK(has(infeasible.out, "infeasible"));
    const Result exhausted = run({"solve", "chromatic", "paper19", "--kmax", "6"});
    CHECK(exhausted.code == 1);
    CHECK(has(exhausted.out, "search exhausted"));
    CHECK(run({"solve", "feasible", "rim18", "--k", "3"}).code == 0);
    CHECK(run({"solve", "enumerate", "rim18", "--k", "3"}).out == "30 colorings\n");
    CHECK(run({"solve", "feasible", "rim18"}).code == 2);
    CHECK(run({"solve", "enumerate", "paper19", "--k", "7"}).code == 2);
}

TEST_CASE("replay") {
    const Result d = run({"replay", "d"});
    CHECK(d.code == 0);
    CHECK(has(d.out, "contradiction: vertices 3,17"));
    CHECK(has(run({"replay", "b"}).out, "reduces to case a"));
    const auto svg = scratch("fig2a.svg");
    const auto transcript = scratch("a.txt");
    CHECK(run({"replay", "a", "--svg", svg.string(), "--transcript", transcript.string()}).code == 0);
    CHECK(has(chroma::read_text_file(svg), "</svg>"));
    CHECK(has(chroma::read_text_file(transcript), "{7,8} => {4,11}"));
    CHECK(run({"replay", "x"}).code == 2);
}

TEST_CASE("tiling") {
    const Result cert = run({"tiling", "certify", "--side", "0.5"});
    CHECK(cert.code == 0);
    CHECK(has(cert.out, "admissible_ratio: 1.3228756"));
    const Result proper = run({"tiling", "proper", "--d", "1.30", "--side", "0.4995"});
    CHECK(proper.code == 0);
    CHECK(has(proper.out, "proper: true"));
    const Result improper = run({"tiling", "proper", "--d", "1.30", "--side", "0.45"});
    CHECK(improper.code == 1);
    CHECK(has(improper.out, "proper: false"));
    const auto hex = scratch("hex.svg");
    CHECK(run({"tiling", "render", "--side", "0.5", "--out", hex.string()}).code == 0);
    CHECK(has(chroma::read_text_file(hex), "<polygon"));
    CHECK(run({"tiling", "certify", "--side", "0.5", "--radius", "1"}).code == 2);
}

TEST_CASE("verify theorem") {
    const Result ok = run({"verify-theorem", "--d", "1.30"});
    CHECK(ok.code == 0);
    CHECK(has(ok.out, "χ = 7 verified at d = 1.3"));
    CHECK(run({"verify-theorem", "--d", "1.286"}).code == 0);
    const Result high = run({"verify-theorem", "--d", "1.40"});
    CHECK(high.code == 2);
    CHECK(has(high.err, "precondition"));
    CHECK(run({"verify-theorem", "--d", "1.30", "--eps", "0.1"}).code == 2);
}

TEST_CASE("constants and usage") {
    const Result c = run({"constants"});
    CHECK(c.code == 0);
    CHECK(has(c.out, "1.2855752194"));
    CHECK(has(c.out, "reference only"));
    CHECK(!has(c.out, "MISMATCH"));
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"--tol", "1e-3", "--margin", "1e-4", "constants"}).code == 2);
}

TEST_CASE("output is deterministic") {
    CHECK(run({"solve", "classify", "rim18", "--k", "3"}).out == run({"solve", "classify", "rim18", "--k", "3"}).out);
    CHECK(run({"graph", "build", "paper19", "--format", "svg"}).out ==
          run({"graph", "build", "paper19", "--format", "svg"}).out);
}
