#pragma once

#include <vector>

#include "twoended/graph.hpp"
#include "twoended/numeric.hpp"

namespace twoended {

// Real- or rational-valued function on vertices.
template <typename T>
class VertexField {
public:
    VertexField() = default;  // empty shell, assign before use
    explicit VertexField(GraphPtr g)
        : g_(std::move(g)), values_(g_->vertex_count(), NumTraits<T>::zero()) {}

    const Graph& graph() const { return *g_; }
    const GraphPtr& graph_ptr() const { return g_; }

    T& operator[](int v) { return values_[v]; }
    const T& operator[](int v) const { return values_[v]; }

    const T& at(VertexId id) const { return values_[g_->require_index(id)]; }

    int size() const { return static_cast<int>(values_.size()); }

private:
    GraphPtr g_;
    std::vector<T> values_;
};

// Antisymmetric function on directed edges. One value per undirected edge is
// stored, oriented along the canonical u < v direction, so f(x,y) = -f(y,x)
// holds structurally.
template <typename T>
class EdgeField {
public:
    EdgeField() = default;  // empty shell, assign before use
    explicit EdgeField(GraphPtr g)
        : g_(std::move(g)), values_(g_->edge_count(), NumTraits<T>::zero()) {}

    const Graph& graph() const { return *g_; }
    const GraphPtr& graph_ptr() const { return g_; }

    // f(x, y) for an existing edge xy; throws PreconditionError otherwise.
    T value(int x, int y) const {
        auto e = g_->edge_index(x, y);
        if (!e) {
            throw PreconditionError("edge field queried on a non-edge " +
                                    to_string(g_->coord(x)) + " -- " + to_string(g_->coord(y)));
        }
        return e->second ? T(-values_[e->first]) : values_[e->first];
    }

    void set(int x, int y, const T& val) {
        auto e = g_->edge_index(x, y);
        if (!e) {
            throw PreconditionError("edge field assigned on a non-edge");
        }
        values_[e->first] = e->second ? T(-val) : val;
    }

    // Value along the canonical orientation of edge id.
    const T& by_edge(int edge_id) const { return values_[edge_id]; }
    T& by_edge(int edge_id) { return values_[edge_id]; }

    int size() const { return static_cast<int>(values_.size()); }

private:
    GraphPtr g_;
    std::vector<T> values_;
};

// Ohm dual of a vertex field: du(x, y) = u(x) - u(y).
template <typename T>
EdgeField<T> gradient(const VertexField<T>& u) {
    EdgeField<T> f(u.graph_ptr());
    const auto& edges = u.graph().edges();
    for (int id = 0; id < static_cast<int>(edges.size()); ++id) {
        f.by_edge(id) = u[edges[id].u] - u[edges[id].v];
    }
    return f;
}

}  // namespace twoended
