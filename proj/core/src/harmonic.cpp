#include "twoended/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace twoended::detail {

std::vector<int> default_schedule(int n0, int probe_radius, int max_radius) {
    std::vector<int> radii;
    for (long gap = 2; n0 + gap < max_radius; gap *= 2) {
        int r = static_cast<int>(n0 + gap);
        if (r > probe_radius) radii.push_back(r);
    }
    if (max_radius > probe_radius && max_radius > n0) {
        radii.push_back(max_radius);
    }
    if (radii.size() < 2) {
        throw PreconditionError("max radius " + std::to_string(max_radius) +
                                " leaves no usable schedule above n0 = " + std::to_string(n0) +
                                " and probe radius " + std::to_string(probe_radius));
    }
    return radii;
}

void check_schedule(const std::vector<int>& schedule, int n0, int probe_radius) {
    if (schedule.size() < 2) {
        throw PreconditionError("schedule needs at least two radii to detect convergence");
    }
    int prev = -1;
    for (int r : schedule) {
        if (r <= prev) {
            throw PreconditionError("schedule must be strictly increasing");
        }
        if (r <= n0) {
            throw PreconditionError("schedule radius " + std::to_string(r) +
                                    " does not exceed n0 = " + std::to_string(n0));
        }
        if (r <= probe_radius) {
            throw PreconditionError("schedule radius " + std::to_string(r) +
                                    " does not exceed the probe radius");
        }
        prev = r;
    }
}

int find_n0(const LayeredSpec& spec, int origin_pos, int max_radius) {
    const int cap = std::max(4, max_radius);
    int window = std::min(8, cap + 2);
    while (true) {
        auto g = expand(spec, -window, window, origin_pos);
        auto bv = ball_view(g, window - 2);
        if (bv.n0) return *bv.n0;
        if (window >= cap + 2) break;
        window = std::min(window * 2, cap + 2);
    }
    throw PreconditionError("no ball of radius <= " + std::to_string(cap) +
                            " separates the two ends; spec looks degenerate");
}

int pick_terminal(const Graph& g, const std::vector<int>& layer, TieBreak tb) {
    auto key = [&](int v) {
        VertexId id = g.coord(v);
        return std::tuple(id.pos, std::abs(id.layer), id.layer);
    };
    int best = layer.front();
    for (int v : layer) {
        if (tb == TieBreak::SmallestPos ? key(v) < key(best) : key(v) > key(best)) {
            best = v;
        }
    }
    return best;
}

}  // namespace twoended::detail
