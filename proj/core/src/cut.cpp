#include "twoended/cut.hpp"

#include "twoended/numeric.hpp"

namespace twoended {

namespace {

void collect_crossing(Cut& c) {
    c.crossing.clear();
    const auto& edges = c.carrier->edges();
    for (int id = 0; id < static_cast<int>(edges.size()); ++id) {
        if (c.in_x[edges[id].u] != c.in_x[edges[id].v]) {
            c.crossing.push_back(id);
        }
    }
}

}  // namespace

Cut Cut::reversed() const {
    Cut out = *this;
    for (auto& side : out.in_x) side = !side;
    return out;
}

bool Cut::separates_ends() const {
    bool upper_in_x = false, upper_in_y = false;
    bool lower_in_x = false, lower_in_y = false;
    for (int v = 0; v < carrier->vertex_count(); ++v) {
        int layer = carrier->coord(v).layer;
        if (layer == carrier->window_hi()) (in_x[v] ? upper_in_x : upper_in_y) = true;
        if (layer == carrier->window_lo()) (in_x[v] ? lower_in_x : lower_in_y) = true;
    }
    bool upper_one_side = upper_in_x != upper_in_y;
    bool lower_one_side = lower_in_x != lower_in_y;
    if (!upper_one_side || !lower_one_side) return false;
    return upper_in_x != lower_in_x;
}

bool Cut::x_holds_upper_end() const {
    for (int v = 0; v < carrier->vertex_count(); ++v) {
        if (carrier->coord(v).layer == carrier->window_hi()) {
            return in_x[v];
        }
    }
    return false;
}

Cut cut_from(const GraphPtr& g, const std::vector<int>& x_vertices) {
    Cut c;
    c.carrier = g;
    c.in_x.assign(g->vertex_count(), 0);
    for (int v : x_vertices) {
        if (v < 0 || v >= g->vertex_count()) {
            throw PreconditionError("cut side contains a vertex outside the carrier");
        }
        c.in_x[v] = 1;
    }
    collect_crossing(c);
    return c;
}

Cut layer_cut(const GraphPtr& g, int threshold, bool upper_as_x) {
    Cut c;
    c.carrier = g;
    c.in_x.assign(g->vertex_count(), 0);
    for (int v = 0; v < g->vertex_count(); ++v) {
        bool lower = g->coord(v).layer <= threshold;
        c.in_x[v] = upper_as_x ? !lower : lower;
    }
    collect_crossing(c);
    return c;
}

}  // namespace twoended
