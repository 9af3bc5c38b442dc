#pragma once

#include <sstream>
#include <string>

#include "twoended/coloring.hpp"
#include "twoended/fields.hpp"
#include "twoended/graph.hpp"
#include "twoended/layered_spec.hpp"

namespace twoended {

// LayeredSpec file format: {"m": ..., "intra": [[a,b],...], "cross": [[j,j'],...]}.
LayeredSpec parse_spec_json(const std::string& text);
LayeredSpec load_spec_json(const std::string& path);
std::string spec_to_json(const LayeredSpec& spec);

// DOT with "n,k" vertex labels; layer_colours tints vertices by layer.
std::string to_dot(const Graph& g, bool layer_colours = false);
std::string to_dot(const EdgeColouring& colouring);

// One line per vertex: "n,k: n1,k1 n2,k2 ...".
std::string adjacency_listing(const Graph& g);

// CSV-style rows, sorted by coordinates. Exact values print as "p/q".
template <typename T>
std::string vertex_field_rows(const VertexField<T>& u) {
    std::ostringstream out;
    const Graph& g = u.graph();
    for (int v = 0; v < g.vertex_count(); ++v) {
        VertexId id = g.coord(v);
        out << id.layer << ',' << id.pos << ',' << NumTraits<T>::to_string(u[v]) << '\n';
    }
    return out.str();
}

template <typename T>
std::string edge_field_rows(const EdgeField<T>& f) {
    std::ostringstream out;
    const Graph& g = f.graph();
    for (int e = 0; e < g.edge_count(); ++e) {
        VertexId a = g.coord(g.edges()[e].u);
        VertexId b = g.coord(g.edges()[e].v);
        out << a.layer << ',' << a.pos << ',' << b.layer << ',' << b.pos << ','
            << NumTraits<T>::to_string(f.by_edge(e)) << '\n';
    }
    return out.str();
}

// Colour map rows: n,k,n',k',colour.
std::string colouring_rows(const EdgeColouring& colouring);

}  // namespace twoended
