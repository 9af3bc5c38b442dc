#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twoended/layered_spec.hpp"

namespace twoended {

// Layer coordinates (n, k). Kept on every vertex so symmetry maps and
// colouring diagnostics can be expressed exactly.
struct VertexId {
    int layer = 0;
    int pos = 0;
    auto operator<=>(const VertexId&) const = default;
};

std::string to_string(const VertexId& v);

class Graph;
using GraphPtr = std::shared_ptr<const Graph>;

// Finite simple graph truncation. Immutable after construction; safe for
// concurrent reads.
class Graph {
public:
    struct Edge {
        int u = 0;  // u < v
        int v = 0;
    };

    static GraphPtr from_edges(int vertex_count,
                               const std::vector<std::pair<int, int>>& edges,
                               int origin = 0);

    // Induced subgraph on the given vertex ids (any order; indices are
    // renumbered preserving the parent's relative order, so layer-sorted
    // parents stay layer-sorted). Coordinates, origin and full degrees carry
    // over; the origin must be among the kept vertices.
    GraphPtr induced(const std::vector<int>& vertices) const;

    int vertex_count() const { return static_cast<int>(coords_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const int> neighbors(int v) const;
    int degree(int v) const;
    // Degree the vertex has in the infinite graph (or in the graph it was
    // induced from). Interior vertices are those whose truncated degree
    // equals it.
    int full_degree(int v) const { return full_degree_[v]; }
    bool is_interior(int v) const { return degree(v) == full_degree_[v]; }

    VertexId coord(int v) const { return coords_[v]; }
    std::optional<int> index_of(VertexId id) const;
    int require_index(VertexId id) const;  // throws PreconditionError

    int origin() const { return origin_; }
    int window_lo() const { return window_lo_; }
    int window_hi() const { return window_hi_; }

    // Edge id plus whether (x, y) runs against the stored u < v orientation.
    std::optional<std::pair<int, bool>> edge_index(int x, int y) const;

    bool connected() const;
    std::vector<int> bfs_distances(int source) const;

    std::vector<int> interior_vertices() const;

private:
    friend GraphPtr expand(const LayeredSpec&, int, int, int);
    Graph() = default;
    void finalize(std::vector<std::pair<int, int>> raw_edges);

    std::vector<VertexId> coords_;
    std::vector<int> full_degree_;
    std::vector<int> adj_offsets_;
    std::vector<int> adj_;
    std::vector<int> adj_edge_ids_;
    std::vector<Edge> edges_;
    std::map<VertexId, int> index_;
    int origin_ = 0;
    int window_lo_ = 0;
    int window_hi_ = 0;
};

// Induced subgraph of the infinite expansion on layers [n_lo, n_hi], with
// origin (0, origin_pos). Requires n_lo < 0 < n_hi. Validates the spec.
GraphPtr expand(const LayeredSpec& spec, int n_lo, int n_hi, int origin_pos);

}  // namespace twoended
