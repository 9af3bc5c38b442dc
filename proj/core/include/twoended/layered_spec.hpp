#pragma once

#include <utility>
#include <vector>

namespace twoended {

// Finite periodic description of a 2-ended infinite graph: a Z-indexed stack
// of identical layers of size m, with fixed intra-layer edges and cross-layer
// edge rules of period 1. (j, j') in cross means (n, j) ~ (n+1, j') for all n.
struct LayeredSpec {
    int layer_size = 0;
    std::vector<std::pair<int, int>> intra;
    std::vector<std::pair<int, int>> cross;

    // Degree a position has in the infinite expansion.
    int full_degree(int pos) const;

    // Throws SpecError naming the offending rule. Checks index ranges,
    // self-loops, duplicate edges, a nonempty cross set (so contracting each
    // layer yields a 2-way infinite path), and connectivity of a 3-layer
    // window, which by periodicity implies connectivity of the expansion.
    void validate() const;
};

}  // namespace twoended
