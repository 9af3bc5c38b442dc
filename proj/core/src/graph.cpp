#include "twoended/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "twoended/numeric.hpp"

namespace twoended {

std::string to_string(const VertexId& v) {
    return std::to_string(v.layer) + "," + std::to_string(v.pos);
}

void Graph::finalize(std::vector<std::pair<int, int>> raw_edges) {
    const int n = vertex_count();
    for (auto& [a, b] : raw_edges) {
        if (a > b) std::swap(a, b);
    }
    std::sort(raw_edges.begin(), raw_edges.end());
    raw_edges.erase(std::unique(raw_edges.begin(), raw_edges.end()), raw_edges.end());

    edges_.reserve(raw_edges.size());
    for (const auto& [a, b] : raw_edges) {
        edges_.push_back({a, b});
    }

    std::vector<int> deg(n, 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    adj_offsets_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) {
        adj_offsets_[v + 1] = adj_offsets_[v] + deg[v];
    }
    adj_.assign(adj_offsets_[n], 0);
    adj_edge_ids_.assign(adj_offsets_[n], 0);
    std::vector<int> fill(n, 0);
    for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
        const auto& e = edges_[id];
        int su = adj_offsets_[e.u] + fill[e.u]++;
        int sv = adj_offsets_[e.v] + fill[e.v]++;
        adj_[su] = e.v;
        adj_edge_ids_[su] = id;
        adj_[sv] = e.u;
        adj_edge_ids_[sv] = id;
    }
    // Neighbour lists come out sorted because the edge list is sorted by
    // (u, v), except for the "v side" entries; sort each bucket with its ids.
    for (int v = 0; v < n; ++v) {
        std::vector<std::pair<int, int>> bucket;
        for (int s = adj_offsets_[v]; s < adj_offsets_[v + 1]; ++s) {
            bucket.emplace_back(adj_[s], adj_edge_ids_[s]);
        }
        std::sort(bucket.begin(), bucket.end());
        for (int s = adj_offsets_[v], i = 0; s < adj_offsets_[v + 1]; ++s, ++i) {
            adj_[s] = bucket[i].first;
            adj_edge_ids_[s] = bucket[i].second;
        }
    }
    for (int v = 0; v < n; ++v) {
        index_.emplace(coords_[v], v);
    }
}

GraphPtr Graph::from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                           int origin) {
    if (vertex_count <= 0) {
        throw PreconditionError("graph needs at least one vertex");
    }
    if (origin < 0 || origin >= vertex_count) {
        throw PreconditionError("origin out of range");
    }
    auto g = std::shared_ptr<Graph>(new Graph());
    g->coords_.reserve(vertex_count);
    for (int v = 0; v < vertex_count; ++v) {
        g->coords_.push_back({0, v});
    }
    for (const auto& [a, b] : edges) {
        if (a == b) {
            throw PreconditionError("self-loop " + std::to_string(a));
        }
        if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
            throw PreconditionError("edge endpoint out of range");
        }
    }
    g->origin_ = origin;
    g->finalize(edges);
    g->full_degree_.resize(vertex_count);
    for (int v = 0; v < vertex_count; ++v) {
        g->full_degree_[v] = g->degree(v);
    }
    return g;
}

GraphPtr Graph::induced(const std::vector<int>& vertices) const {
    std::vector<int> keep = vertices;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> remap(vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        remap[keep[i]] = i;
    }
    if (remap[origin_] < 0) {
        throw PreconditionError("induced subgraph must keep the origin");
    }
    auto g = std::shared_ptr<Graph>(new Graph());
    g->coords_.reserve(keep.size());
    g->full_degree_.reserve(keep.size());
    int lo = coords_[keep.front()].layer;
    int hi = lo;
    for (int v : keep) {
        g->coords_.push_back(coords_[v]);
        g->full_degree_.push_back(full_degree_[v]);
        lo = std::min(lo, coords_[v].layer);
        hi = std::max(hi, coords_[v].layer);
    }
    g->origin_ = remap[origin_];
    g->window_lo_ = lo;
    g->window_hi_ = hi;
    std::vector<std::pair<int, int>> kept_edges;
    for (const auto& e : edges_) {
        if (remap[e.u] >= 0 && remap[e.v] >= 0) {
            kept_edges.emplace_back(remap[e.u], remap[e.v]);
        }
    }
    g->finalize(std::move(kept_edges));
    return g;
}

std::span<const int> Graph::neighbors(int v) const {
    return {adj_.data() + adj_offsets_[v],
            static_cast<size_t>(adj_offsets_[v + 1] - adj_offsets_[v])};
}

int Graph::degree(int v) const { return adj_offsets_[v + 1] - adj_offsets_[v]; }

std::optional<int> Graph::index_of(VertexId id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Graph::require_index(VertexId id) const {
    auto v = index_of(id);
    if (!v) {
        throw PreconditionError("vertex " + to_string(id) + " is not in the graph");
    }
    return *v;
}

std::optional<std::pair<int, bool>> Graph::edge_index(int x, int y) const {
    for (int s = adj_offsets_[x]; s < adj_offsets_[x + 1]; ++s) {
        if (adj_[s] == y) {
            const int id = adj_edge_ids_[s];
            return std::make_pair(id, edges_[id].u != x);
        }
    }
    return std::nullopt;
}

std::vector<int> Graph::bfs_distances(int source) const {
    std::vector<int> dist(vertex_count(), -1);
    std::queue<int> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int w : neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
        }
    }
    return dist;
}

bool Graph::connected() const {
    auto dist = bfs_distances(0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<int> Graph::interior_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v) {
        if (is_interior(v)) out.push_back(v);
    }
    return out;
}

GraphPtr expand(const LayeredSpec& spec, int n_lo, int n_hi, int origin_pos) {
    spec.validate();
    if (!(n_lo < 0 && 0 < n_hi)) {
        throw PreconditionError("expand window must straddle layer 0");
    }
    if (origin_pos < 0 || origin_pos >= spec.layer_size) {
        throw PreconditionError("origin position out of range");
    }
    const int m = spec.layer_size;
    const int layers = n_hi - n_lo + 1;
    auto g = std::shared_ptr<Graph>(new Graph());
    g->coords_.reserve(static_cast<size_t>(layers) * m);
    g->full_degree_.reserve(static_cast<size_t>(layers) * m);
    for (int n = n_lo; n <= n_hi; ++n) {
        for (int k = 0; k < m; ++k) {
            g->coords_.push_back({n, k});
            g->full_degree_.push_back(spec.full_degree(k));
        }
    }
    auto at = [&](int n, int k) { return (n - n_lo) * m + k; };
    std::vector<std::pair<int, int>> raw;
    for (int n = n_lo; n <= n_hi; ++n) {
        for (const auto& [a, b] : spec.intra) {
            raw.emplace_back(at(n, a), at(n, b));
        }
        if (n < n_hi) {
            for (const auto& [j, jp] : spec.cross) {
                raw.emplace_back(at(n, j), at(n + 1, jp));
            }
        }
    }
    g->origin_ = at(0, origin_pos);
    g->window_lo_ = n_lo;
    g->window_hi_ = n_hi;
    g->finalize(std::move(raw));
    return g;
}

}  // namespace twoended
