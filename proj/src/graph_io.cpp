#include "chroma/graph_io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "chroma/errors.hpp"
#include "json.hpp"

namespace chroma {

using nlohmann::json;

namespace {

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

// Line of the first occurrence of "key"; 0 when absent.
std::size_t line_of_key(const std::string& text, const std::string& key) {
    const auto pos = text.find("\"" + key + "\"");
    return pos == std::string::npos ? 0 : line_of_offset(text, pos);
}

struct FieldReader {
    const std::string& text;

    [[noreturn]] void fail(const std::string& key, const std::string& path, const std::string& what) const {
        throw ParseError(path, line_of_key(text, key), what);
    }

    int integer(const json& j, const std::string& key, const std::string& path) const {
        if (!j.is_number_integer()) fail(key, path, "expected an integer");
        return j.get<int>();
    }

    double number(const json& j, const std::string& key, const std::string& path) const {
        if (!j.is_number()) fail(key, path, "expected a number");
        return j.get<double>();
    }

    const json& array(const json& j, const std::string& key, const std::string& path) const {
        if (!j.is_array()) fail(key, path, "expected an array");
        return j;
    }
};

}  // namespace

std::string graph_to_json(const GeometricGraph& g) {
    json doc;
    doc["version"] = kGraphFormatVersion;
    if (g.has_points()) {
        json pts = json::array();
        for (const Point2& p : g.points()) pts.push_back({p.x, p.y});
        doc["points"] = std::move(pts);
    }
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    doc["demands"] = std::vector<int>(g.demands().begin(), g.demands().end());
    if (g.has_labels()) doc["labels"] = std::vector<int>(g.labels().begin(), g.labels().end());
    if (g.interval()) doc["interval"] = {{"d", g.interval()->d()}};
    return doc.dump(1) + "\n";
}

GeometricGraph graph_from_json(const std::string& text, const ToleranceConfig& tolcfg) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("", line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
    } catch (const json::exception& e) {
        throw ParseError("", 0, e.what());
    }
    const FieldReader rd{text};
    if (!doc.is_object()) throw ParseError("", 1, "document must be an object");
    if (!doc.contains("version")) rd.fail("version", "version", "missing");
    if (rd.integer(doc["version"], "version", "version") != kGraphFormatVersion) {
        rd.fail("version", "version", "unsupported version");
    }

    std::vector<Point2> points;
    if (doc.contains("points")) {
        const json& arr = rd.array(doc["points"], "points", "points");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string path = "points[" + std::to_string(i) + "]";
            if (!arr[i].is_array() || arr[i].size() != 2) rd.fail("points", path, "expected [x, y]");
            try {
                points.emplace_back(rd.number(arr[i][0], "points", path), rd.number(arr[i][1], "points", path));
            } catch (const DomainError& e) {
                rd.fail("points", path, e.what());
            }
        }
    }

    std::optional<IntervalSpec> interval;
    if (doc.contains("interval")) {
        const json& iv = doc["interval"];
        if (!iv.is_object() || !iv.contains("d")) rd.fail("interval", "interval", "expected {\"d\": number}");
        try {
            interval = interval_from_d(rd.number(iv["d"], "interval", "interval.d"));
        } catch (const DomainError& e) {
            rd.fail("interval", "interval.d", e.what());
        }
    }

    std::vector<int> demands;
    if (doc.contains("demands")) {
        const json& arr = rd.array(doc["demands"], "demands", "demands");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            demands.push_back(rd.integer(arr[i], "demands", "demands[" + std::to_string(i) + "]"));
        }
    } else if (!points.empty()) {
        demands.assign(points.size(), 1);
    } else {
        rd.fail("demands", "demands", "missing (required when no points are given)");
    }
    const std::size_t n = demands.size();
    if (!points.empty() && points.size() != n) {
        rd.fail("points", "points", std::to_string(points.size()) + " points for " + std::to_string(n) + " demands");
    }

    std::vector<int> labels;
    if (doc.contains("labels")) {
        const json& arr = rd.array(doc["labels"], "labels", "labels");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            labels.push_back(rd.integer(arr[i], "labels", "labels[" + std::to_string(i) + "]"));
        }
    }

    if (!doc.contains("edges")) {
        if (points.empty() || !interval) rd.fail("edges", "edges", "missing (required unless points and interval are given)");
        try {
            return build_interval_graph(std::move(points), *interval, tolcfg, std::move(demands), std::move(labels));
        } catch (const ConstructionError& e) {
            throw ValidationError(e.what());
        }
    }

    std::vector<Edge> edges;
    const json& arr = rd.array(doc["edges"], "edges", "edges");
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string path = "edges[" + std::to_string(i) + "]";
        if (!arr[i].is_array() || arr[i].size() != 2) rd.fail("edges", path, "expected [i, j]");
        const int u = rd.integer(arr[i][0], "edges", path);
        const int v = rd.integer(arr[i][1], "edges", path);
        if (u == v) rd.fail("edges", path, "self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
            rd.fail("edges", path, "vertex index out of range");
        }
        edges.emplace_back(u, v);
    }

    GeometricGraph g = [&] {
        try {
            return GeometricGraph(n, std::move(edges), std::move(demands), std::move(points), std::move(labels),
                                  interval);
        } catch (const ValidationError& e) {
            throw ParseError("", 0, e.what());
        }
    }();
    g.validate_geometry(tolcfg);
    return g;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void save_graph(const GeometricGraph& g, const std::filesystem::path& path) { write_text_file(path, graph_to_json(g)); }

GeometricGraph load_graph(const std::filesystem::path& path, const ToleranceConfig& tolcfg) {
    return graph_from_json(read_text_file(path), tolcfg);
}

std::string colorings_to_json(std::span<const SetColoring> colorings) {
    json arr = json::array();
    for (const SetColoring& c : colorings) {
        json one = json::array();
        for (ColorSet s : c) one.push_back(s.colors());
        arr.push_back(std::move(one));
    }
    json doc;
    doc["colorings"] = std::move(arr);
    return doc.dump() + "\n";
}

std::vector<SetColoring> colorings_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("", line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
    } catch (const json::exception& e) {
        throw ParseError("", 0, e.what());
    }
    const FieldReader rd{text};
    if (!doc.is_object() || !doc.contains("colorings")) rd.fail("colorings", "colorings", "missing");
    std::vector<SetColoring> out;
    const json& arr = rd.array(doc["colorings"], "colorings", "colorings");
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string path = "colorings[" + std::to_string(i) + "]";
        SetColoring c;
        for (std::size_t v = 0; v < rd.array(arr[i], "colorings", path).size(); ++v) {
            const std::string vpath = path + "[" + std::to_string(v) + "]";
            ColorSet s;
            for (const json& col : rd.array(arr[i][v], "colorings", vpath)) {
                const int x = rd.integer(col, "colorings", vpath);
                if (x < 0 || x >= kMaxColors) rd.fail("colorings", vpath, "color index out of range");
                if (s.contains(x)) rd.fail("colorings", vpath, "repeated color");
                s.insert(x);
            }
            c.push_back(s);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::string graph_to_dot(const GeometricGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < static_cast<int>(g.size()); ++v) {
        out << "  " << v << " [label=\"" << g.label(v) << "\", demand=" << g.demand(v);
        if (g.demand(v) == 2) out << ", shape=doublecircle";
        if (g.demand(v) >= 3) out << ", shape=tripleoctagon";
        out << "];\n";
    }
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string_view svg_color(int c) {
    static constexpr std::array<std::string_view, 10> kPalette = {
        "#e6194b", "#3cb44b", "#4363d8", "#ffe119", "#911eb4", "#f58231", "#42d4f4", "#f032e6", "#bfef45", "#9a6324"};
    return kPalette[static_cast<std::size_t>(c) % kPalette.size()];
}

std::string graph_to_svg(const GeometricGraph& g, const SetColoring* coloring) {
    constexpr double kSize = 480.0;
    constexpr double kPad = 36.0;
    constexpr double kRadius = 11.0;
    const int n = static_cast<int>(g.size());
    std::vector<Point2> pts(g.points().begin(), g.points().end());
    if (pts.empty() && n > 0) pts = n == 1 ? std::vector<Point2>{{0.0, 0.0}} : circle_layout(n, 1.0, std::numbers::pi / 2);

    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i == 0) {
            minx = maxx = pts[i].x;
            miny = maxy = pts[i].y;
        }
        minx = std::min(minx, pts[i].x);
        maxx = std::max(maxx, pts[i].x);
        miny = std::min(miny, pts[i].y);
        maxy = std::max(maxy, pts[i].y);
    }
    const double span = std::max({maxx - minx, maxy - miny, 1e-9});
    const double scale = (kSize - 2 * kPad) / span;
    auto sx = [&](Point2 p) { return kPad + (p.x - minx) * scale; };
    auto sy = [&](Point2 p) { return kSize - kPad - (p.y - miny) * scale; };

    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
        << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n<g stroke=\"#555\" stroke-width=\"1\">\n";
    for (const auto& [u, v] : g.edges()) {
        const Point2 a = pts[static_cast<std::size_t>(u)];
        const Point2 b = pts[static_cast<std::size_t>(v)];
        out << "<line x1=\"" << sx(a) << "\" y1=\"" << sy(a) << "\" x2=\"" << sx(b) << "\" y2=\"" << sy(b) << "\"/>\n";
    }
    out << "</g>\n<g stroke=\"black\" stroke-width=\"1\">\n";
    for (int v = 0; v < n; ++v) {
        const double cx = sx(pts[static_cast<std::size_t>(v)]);
        const double cy = sy(pts[static_cast<std::size_t>(v)]);
        std::vector<int> cols;
        if (coloring && static_cast<std::size_t>(v) < coloring->size()) cols = (*coloring)[static_cast<std::size_t>(v)].colors();
        if (cols.size() <= 1) {
            const std::string fill = cols.empty() ? std::string("white") : std::string(svg_color(cols[0]));
            out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << kRadius << "\" fill=\"" << fill << "\"/>\n";
        } else {
            const double step = 2.0 * std::numbers::pi / static_cast<double>(cols.size());
            for (std::size_t k = 0; k < cols.size(); ++k) {
                const double a0 = -std::numbers::pi / 2 + step * static_cast<double>(k);
                const double a1 = a0 + step;
                out << "<path d=\"M " << cx << ' ' << cy << " L " << cx + kRadius * std::cos(a0) << ' '
                    << cy + kRadius * std::sin(a0) << " A " << kRadius << ' ' << kRadius << " 0 0 1 "
                    << cx + kRadius * std::cos(a1) << ' ' << cy + kRadius * std::sin(a1) << " Z\" fill=\""
                    << svg_color(cols[k]) << "\"/>\n";
            }
        }
        out << "<text x=\"" << cx << "\" y=\"" << cy - kRadius - 3
            << "\" font-size=\"10\" text-anchor=\"middle\" stroke=\"none\">" << g.label(v) << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace chroma
