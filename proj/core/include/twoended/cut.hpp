#pragma once

#include <vector>

#include "twoended/fields.hpp"
#include "twoended/graph.hpp"

namespace twoended {

// Vertex bipartition (X, Y) with the crossing edge set E(X, Y).
struct Cut {
    GraphPtr carrier;
    std::vector<char> in_x;          // per vertex
    std::vector<int> crossing;       // edge ids with one end on each side

    Cut reversed() const;
    // True when X holds every vertex of the top boundary layer and Y every
    // vertex of the bottom one (or vice versa): the operational notion of an
    // end-separating cut on a truncation.
    bool separates_ends() const;
    // True when the X side contains the upper (positive-layer) boundary.
    bool x_holds_upper_end() const;
};

// X given as vertex ids; every listed id must exist in g.
Cut cut_from(const GraphPtr& g, const std::vector<int>& x_vertices);

// X = vertices with layer <= threshold (upper_as_x flips the orientation so
// X becomes the side with layer > threshold).
Cut layer_cut(const GraphPtr& g, int threshold, bool upper_as_x);

// Sum of f over crossing edges oriented X -> Y.
template <typename T>
T cut_flow(const EdgeField<T>& f, const Cut& c) {
    if (f.graph_ptr().get() != c.carrier.get()) {
        throw PreconditionError("cut and edge field live on different carriers");
    }
    T total = NumTraits<T>::zero();
    const auto& edges = c.carrier->edges();
    for (int id : c.crossing) {
        const auto& e = edges[id];
        total += c.in_x[e.u] ? f.by_edge(id) : T(-f.by_edge(id));
    }
    return total;
}

}  // namespace twoended
