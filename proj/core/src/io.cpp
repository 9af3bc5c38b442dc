#include "twoended/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "twoended/numeric.hpp"

namespace twoended {

Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) {
        throw SpecError("cannot parse rational '" + text + "'");
    }
    if (r.get_den() == 0) {
        throw SpecError("zero denominator in rational '" + text + "'");
    }
    r.canonicalize();
    return r;
}

namespace {

std::vector<std::pair<int, int>> parse_pairs(const nlohmann::json& arr, const char* what) {
    std::vector<std::pair<int, int>> out;
    if (!arr.is_array()) {
        throw SpecError(std::string(what) + " must be an array of pairs");
    }
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer()) {
            throw SpecError(std::string(what) + " entries must be integer pairs");
        }
        out.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    return out;
}

}  // namespace

LayeredSpec parse_spec_json(const std::string& text) {
    LayeredSpec spec;
    try {
        nlohmann::json doc = nlohmann::json::parse(text);
        if (!doc.is_object() || !doc.contains("m")) {
            throw SpecError("spec document needs fields m, intra, cross");
        }
        spec.layer_size = doc["m"].get<int>();
        if (doc.contains("intra")) spec.intra = parse_pairs(doc["intra"], "intra");
        if (doc.contains("cross")) spec.cross = parse_pairs(doc["cross"], "cross");
    } catch (const nlohmann::json::exception& e) {
        throw SpecError(std::string("malformed spec document: ") + e.what());
    }
    spec.validate();
    return spec;
}

LayeredSpec load_spec_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw SpecError("cannot open spec file " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_spec_json(buffer.str());
}

std::string spec_to_json(const LayeredSpec& spec) {
    nlohmann::json doc;
    doc["m"] = spec.layer_size;
    doc["intra"] = nlohmann::json::array();
    for (const auto& [a, b] : spec.intra) doc["intra"].push_back({a, b});
    doc["cross"] = nlohmann::json::array();
    for (const auto& [j, jp] : spec.cross) doc["cross"].push_back({j, jp});
    return doc.dump();
}

namespace {

const char* kLayerPalette[] = {"lightblue",  "lightyellow", "lightpink",
                               "lightgreen", "lavender",    "wheat"};

}  // namespace

std::string to_dot(const Graph& g, bool layer_colours) {
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        VertexId id = g.coord(v);
        out << "  \"" << to_string(id) << "\"";
        if (layer_colours) {
            out << " [style=filled, fillcolor=" << kLayerPalette[((id.layer % 6) + 6) % 6] << "]";
        }
        out << ";\n";
    }
    for (const auto& e : g.edges()) {
        out << "  \"" << to_string(g.coord(e.u)) << "\" -- \"" << to_string(g.coord(e.v))
            << "\";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const EdgeColouring& colouring) {
    const Graph& g = *colouring.carrier;
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  \"" << to_string(g.coord(v)) << "\";\n";
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        out << "  \"" << to_string(g.coord(g.edges()[e].u)) << "\" -- \""
            << to_string(g.coord(g.edges()[e].v))
            << "\" [color=" << to_string(colouring.by_edge[e]) << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string adjacency_listing(const Graph& g) {
    std::ostringstream out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << to_string(g.coord(v)) << ":";
        for (int w : g.neighbors(v)) {
            out << ' ' << to_string(g.coord(w));
        }
        out << '\n';
    }
    return out.str();
}

std::string colouring_rows(const EdgeColouring& colouring) {
    const Graph& g = *colouring.carrier;
    std::ostringstream out;
    for (int e = 0; e < g.edge_count(); ++e) {
        VertexId a = g.coord(g.edges()[e].u);
        VertexId b = g.coord(g.edges()[e].v);
        out << a.layer << ',' << a.pos << ',' << b.layer << ',' << b.pos << ','
            << to_string(colouring.by_edge[e]) << '\n';
    }
    return out.str();
}

}  // namespace twoended
