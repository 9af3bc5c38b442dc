#include "twoended/coloring.hpp"

#include <array>

namespace twoended {

const char* to_string(ColourCaseKind kind) {
    switch (kind) {
        case ColourCaseKind::Case1: return "case1";
        case ColourCaseKind::Case2: return "case2";
        case ColourCaseKind::Case3: return "case3";
    }
    return "?";
}

const char* to_string(EdgeColour colour) {
    switch (colour) {
        case EdgeColour::Red: return "red";
        case EdgeColour::Blue: return "blue";
        case EdgeColour::Green: return "green";
    }
    return "?";
}

ColouringReport verify_colouring(const EdgeColouring& colouring) {
    ColouringReport rep;
    const Graph& g = *colouring.carrier;
    for (int v : colouring.interior) {
        std::array<int, 3> count{0, 0, 0};
        for (int w : g.neighbors(v)) {
            auto e = g.edge_index(v, w);
            ++count[static_cast<int>(colouring.by_edge[e->first])];
        }
        for (int c = 0; c < 3; ++c) {
            if (count[c] > 1) {
                rep.violations.push_back("vertex " + to_string(g.coord(v)) + " has " +
                                         std::to_string(count[c]) + " " +
                                         to_string(static_cast<EdgeColour>(c)) + " edges");
            } else if (count[c] == 0) {
                rep.violations.push_back("vertex " + to_string(g.coord(v)) + " is missed by the " +
                                         std::string(to_string(static_cast<EdgeColour>(c))) +
                                         " matching");
            }
        }
    }
    rep.pass = rep.violations.empty();
    return rep;
}

}  // namespace twoended
