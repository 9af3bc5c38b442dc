#include "twoended/ball_view.hpp"

#include <algorithm>
#include <string>

#include "twoended/numeric.hpp"

namespace twoended {

namespace {

// Component structure of g minus {v : removed[v]}: fills comp ids and returns
// which components touch the top and bottom boundary layers.
struct Components {
    std::vector<int> comp;  // -1 for removed vertices
    std::vector<char> reaches_upper;
    std::vector<char> reaches_lower;
    int count = 0;
};

Components components_without(const Graph& g, const std::vector<char>& removed) {
    Components out;
    out.comp.assign(g.vertex_count(), -1);
    std::vector<int> stack;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (removed[v] || out.comp[v] >= 0) continue;
        const int id = out.count++;
        out.reaches_upper.push_back(0);
        out.reaches_lower.push_back(0);
        out.comp[v] = id;
        stack.assign(1, v);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (g.coord(x).layer == g.window_hi()) out.reaches_upper[id] = 1;
            if (g.coord(x).layer == g.window_lo()) out.reaches_lower[id] = 1;
            for (int y : g.neighbors(x)) {
                if (!removed[y] && out.comp[y] < 0) {
                    out.comp[y] = id;
                    stack.push_back(y);
                }
            }
        }
    }
    return out;
}

// A ball separates the two ends (operationally) iff no leftover component
// reaches both truncation boundaries.
bool separates(const Graph& g, const std::vector<int>& dist, int k) {
    std::vector<char> removed(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        removed[v] = dist[v] >= 0 && dist[v] <= k;
    }
    auto comps = components_without(g, removed);
    for (int c = 0; c < comps.count; ++c) {
        if (comps.reaches_upper[c] && comps.reaches_lower[c]) return false;
    }
    return true;
}

int unique_component(const Components& comps, const std::vector<char>& reaches,
                     const char* direction) {
    int found = -1;
    for (int c = 0; c < comps.count; ++c) {
        if (!reaches[c]) continue;
        if (found >= 0) {
            throw Error(std::string("more than one ") + direction +
                        "-boundary-reaching component; the spec is not 2-ended here");
        }
        found = c;
    }
    if (found < 0) {
        throw Error(std::string("no ") + direction + "-boundary-reaching component");
    }
    return found;
}

}  // namespace

BallView ball_view(const GraphPtr& g, int radius) {
    if (radius < 0) {
        throw PreconditionError("ball radius must be nonnegative");
    }
    BallView bv;
    bv.carrier = g;
    bv.radius = radius;
    bv.dist = g->bfs_distances(g->origin());

    // The window must strictly contain layers within radius+1 of the origin.
    // Edges change layers by at most one, so this pins B_{radius+1} and all
    // distances up to radius+1 exactly; checking observed distances instead
    // would miss truncation-inflated ones.
    const int o_layer = g->coord(g->origin()).layer;
    if (g->window_lo() >= o_layer - (radius + 1) || g->window_hi() <= o_layer + (radius + 1)) {
        throw TruncationError(
            "insufficient truncation for ball radius " + std::to_string(radius) +
            ": B_" + std::to_string(radius + 1) + " may touch the window boundary; use a "
            "window strictly containing layers [" + std::to_string(o_layer - radius - 1) +
            ", " + std::to_string(o_layer + radius + 1) + "]");
    }

    for (int v = 0; v < g->vertex_count(); ++v) {
        if (bv.dist[v] >= 0 && bv.dist[v] <= radius) bv.ball.push_back(v);
        if (bv.dist[v] == radius) bv.sphere.push_back(v);
    }

    std::vector<char> removed(g->vertex_count(), 0);
    for (int v = 0; v < g->vertex_count(); ++v) {
        removed[v] = bv.dist[v] >= 0 && bv.dist[v] <= radius - 1;
    }
    auto comps = components_without(*g, removed);
    int upper = unique_component(comps, comps.reaches_upper, "upper");
    int lower = unique_component(comps, comps.reaches_lower, "lower");
    for (int v : bv.sphere) {
        if (comps.comp[v] == upper) bv.upper_layer.push_back(v);
        if (comps.comp[v] == lower) bv.lower_layer.push_back(v);
    }

    for (int k = 0; k <= radius; ++k) {
        if (separates(*g, bv.dist, k)) {
            bv.n0 = k;
            break;
        }
    }
    return bv;
}

}  // namespace twoended
