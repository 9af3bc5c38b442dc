#pragma once

#include <optional>
#include <vector>

#include "twoended/graph.hpp"

namespace twoended {

// Balls, spheres and the two directed layers of a truncation, with the ends
// represented operationally as boundary-reaching components.
struct BallView {
    GraphPtr carrier;
    int radius = 0;
    std::vector<int> dist;         // BFS distance from the origin
    std::vector<int> ball;         // d(o, v) <= radius, ascending ids
    std::vector<int> sphere;       // d(o, v) == radius
    std::vector<int> upper_layer;  // L_n: sphere cap in the upper component of G - B_{n-1}
    std::vector<int> lower_layer;  // L_{-n}
    // Least k such that removing B_k disconnects the two truncation
    // boundaries; empty if no k <= radius separates.
    std::optional<int> n0;
};

// Requires the truncation window to strictly contain B_{radius+1}; throws
// TruncationError naming the required window otherwise. When B_{radius-1}
// does not separate, upper_layer == lower_layer (they are the same sphere cap).
BallView ball_view(const GraphPtr& g, int radius);

}  // namespace twoended
