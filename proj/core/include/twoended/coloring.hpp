#pragma once

#include <array>
#include <string>
#include <vector>

#include "twoended/fields.hpp"
#include "twoended/graph.hpp"
#include "twoended/numeric.hpp"

namespace twoended {

enum class ColourCaseKind { Case1, Case2, Case3 };

const char* to_string(ColourCaseKind kind);

// Sorted neighbour differences of a harmonic function at a cubic vertex,
// rescaled (sign included) so the largest value is 1:
//   Case1 (-1, 0, 1);  Case2 (-1/2, -1/2, 1);  Case3 a < b < 0 < 1, a + b = -1.
template <typename T>
struct ColourCase {
    ColourCaseKind kind = ColourCaseKind::Case1;
    std::array<T, 3> pattern{};
    T scale = NumTraits<T>::zero();  // pattern = scale * sorted raw differences
};

// tol < 0 picks the mode default: exact comparison for rationals, 1e-9 for
// binary64 (after rescaling).
template <typename T>
ColourCase<T> classify_case(const VertexField<T>& g, int o, double tol = -1.0);

// Classifies at every interior vertex and requires one consistent case.
template <typename T>
ColourCase<T> classify_case_sampled(const VertexField<T>& g, double tol = -1.0);

enum class EdgeColour { Red, Blue, Green };
const char* to_string(EdgeColour colour);

struct EdgeColouring {
    GraphPtr carrier;
    std::vector<EdgeColour> by_edge;  // per canonical edge id
    std::vector<int> interior;
    // Diagnostics from the construction: cycle lengths of the two-regular
    // leftover subgraph (Case 1/2 only).
    std::vector<int> h_cycle_lengths;
};

// The harmonic 3-edge-colouring. Case 1/2: the stated red class plus
// blue/green alternation around each leftover component (cycles must be even,
// enforced via the signed-step count); Case 3: colour by gradient magnitude.
template <typename T>
EdgeColouring three_edge_colour(const VertexField<T>& g, const ColourCase<T>& cc,
                                double tol = -1.0);

struct ColouringReport {
    bool pass = false;
    std::vector<std::string> violations;
};

// Properness plus one edge of each colour at every interior vertex (the three
// interior-perfect-matchings decomposition).
ColouringReport verify_colouring(const EdgeColouring& colouring);

// --- implementation ---

namespace detail {

// Exact mode compares rationals exactly; float comparisons use the given
// tolerance (default 1e-9) after rescaling.
template <typename T>
double compare_tol(double requested) {
    if (requested >= 0) return requested;
    return NumTraits<T>::exact ? 0.0 : 1e-9;
}

}  // namespace detail

template <typename T>
ColourCase<T> classify_case(const VertexField<T>& g, int o, double tol_in) {
    const double tol = detail::compare_tol<T>(tol_in);
    const Graph& carrier = g.graph();
    if (carrier.full_degree(o) != 3) {
        throw PreconditionError("case classification needs a cubic vertex, degree is " +
                                std::to_string(carrier.full_degree(o)));
    }
    if (!carrier.is_interior(o)) {
        throw PreconditionError("case classification at a truncated vertex " +
                                to_string(carrier.coord(o)));
    }
    std::array<T, 3> d{};
    int i = 0;
    for (int y : carrier.neighbors(o)) {
        d[i++] = g[y] - g[o];
    }
    std::sort(d.begin(), d.end());
    const T sum = d[0] + d[1] + d[2];
    T magnitude = std::max(NumTraits<T>::abs(d[0]), NumTraits<T>::abs(d[2]));
    if (magnitude == NumTraits<T>::zero()) {
        throw PreconditionError("field is constant around " + to_string(carrier.coord(o)));
    }
    if (!within_tolerance(T(sum / magnitude), tol)) {
        throw PreconditionError("neighbour differences at " + to_string(carrier.coord(o)) +
                                " do not sum to zero; field is not harmonic there");
    }
    // Canonical orientation: at most one positive difference. Flipping the
    // sign is part of the allowed rescaling.
    T scale = NumTraits<T>::one();
    if (d[1] > NumTraits<T>::zero()) {
        std::array<T, 3> flipped{T(-d[2]), T(-d[1]), T(-d[0])};
        d = flipped;
        scale = T(-scale);
    }
    scale = scale / d[2];

    ColourCase<T> cc;
    cc.scale = scale;
    cc.pattern = {T(d[0] / d[2]), T(d[1] / d[2]), NumTraits<T>::one()};
    if (within_tolerance(cc.pattern[1], tol)) {
        cc.kind = ColourCaseKind::Case1;
    } else if (within_tolerance(T(cc.pattern[0] - cc.pattern[1]), tol)) {
        cc.kind = ColourCaseKind::Case2;
    } else {
        cc.kind = ColourCaseKind::Case3;
    }
    return cc;
}

template <typename T>
ColourCase<T> classify_case_sampled(const VertexField<T>& g, double tol_in) {
    const double tol = detail::compare_tol<T>(tol_in);
    const Graph& carrier = g.graph();
    bool have = false;
    ColourCase<T> first;
    for (int v = 0; v < carrier.vertex_count(); ++v) {
        if (!carrier.is_interior(v)) continue;
        ColourCase<T> cc = classify_case(g, v, tol);
        if (!have) {
            first = cc;
            have = true;
        } else if (cc.kind != first.kind) {
            throw PreconditionError("case classification varies across vertices (" +
                                    std::string(to_string(first.kind)) + " vs " +
                                    to_string(cc.kind) + " at " + to_string(carrier.coord(v)) +
                                    ")");
        }
    }
    if (!have) {
        throw PreconditionError("no interior vertex to classify");
    }
    return first;
}

template <typename T>
EdgeColouring three_edge_colour(const VertexField<T>& g, const ColourCase<T>& cc, double tol_in) {
    const double tol = detail::compare_tol<T>(tol_in);
    const GraphPtr& carrier = g.graph_ptr();
    const Graph& graph = *carrier;
    EdgeColouring colouring;
    colouring.carrier = carrier;
    colouring.by_edge.assign(graph.edge_count(), EdgeColour::Red);
    colouring.interior = graph.interior_vertices();

    // Rescaled signed difference along the canonical edge orientation.
    auto delta = [&](int e) {
        const auto& edge = graph.edges()[e];
        return T((g[edge.u] - g[edge.v]) * cc.scale);
    };
    auto matches = [&](const T& value, const T& target) {
        return within_tolerance(T(value - target), tol);
    };

    if (cc.kind == ColourCaseKind::Case3) {
        const T a = NumTraits<T>::abs(cc.pattern[0]);
        const T b = NumTraits<T>::abs(cc.pattern[1]);
        for (int e = 0; e < graph.edge_count(); ++e) {
            T mag = NumTraits<T>::abs(delta(e));
            if (matches(mag, NumTraits<T>::one())) {
                colouring.by_edge[e] = EdgeColour::Red;
            } else if (matches(mag, a)) {
                colouring.by_edge[e] = EdgeColour::Blue;
            } else if (matches(mag, b)) {
                colouring.by_edge[e] = EdgeColour::Green;
            } else {
                throw PreconditionError(
                    "gradient magnitude outside the three classified values on edge " +
                    to_string(graph.coord(graph.edges()[e].u)) + " -- " +
                    to_string(graph.coord(graph.edges()[e].v)));
            }
        }
        return colouring;
    }

    // Cases 1 and 2: the red class is determined by the gradient, the rest is
    // a 2-regular leftover H whose components alternate blue/green.
    const T one = NumTraits<T>::one();
    const T h_mag = cc.kind == ColourCaseKind::Case1 ? one : T(one / NumTraits<T>::from_int(2));
    std::vector<char> is_red(graph.edge_count(), 0);
    for (int e = 0; e < graph.edge_count(); ++e) {
        T mag = NumTraits<T>::abs(delta(e));
        if (cc.kind == ColourCaseKind::Case1 ? within_tolerance(mag, tol) : matches(mag, one)) {
            is_red[e] = 1;
        } else if (!matches(mag, h_mag)) {
            throw PreconditionError("gradient magnitude matches neither the red class nor the "
                                    "alternating class on an edge");
        }
    }

    std::vector<std::vector<std::pair<int, int>>> h_adj(graph.vertex_count());  // (nbr, edge)
    for (int e = 0; e < graph.edge_count(); ++e) {
        if (is_red[e]) continue;
        const auto& edge = graph.edges()[e];
        h_adj[edge.u].emplace_back(edge.v, e);
        h_adj[edge.v].emplace_back(edge.u, e);
    }
    for (int v : colouring.interior) {
        if (h_adj[v].size() != 2) {
            throw PreconditionError("leftover subgraph is not 2-regular at " +
                                    to_string(graph.coord(v)));
        }
    }
    for (int v = 0; v < graph.vertex_count(); ++v) {
        if (h_adj[v].size() > 2) {
            throw PreconditionError("leftover subgraph exceeds degree 2 at " +
                                    to_string(graph.coord(v)));
        }
    }

    // Walk each component once. Paths start at their lexicographically
    // smallest endpoint, cycles at their smallest vertex toward its smaller
    // neighbour; the first edge is blue.
    std::vector<char> edge_done(graph.edge_count(), 0);
    std::vector<char> vertex_seen(graph.vertex_count(), 0);
    for (int start = 0; start < graph.vertex_count(); ++start) {
        if (vertex_seen[start] || h_adj[start].empty()) continue;
        // Collect the component and decide where the walk begins.
        std::vector<int> component;
        std::vector<int> stack{start};
        vertex_seen[start] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            component.push_back(v);
            for (const auto& [w, e] : h_adj[v]) {
                if (!vertex_seen[w]) {
                    vertex_seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(component.begin(), component.end());
        std::vector<int> endpoints;
        for (int v : component) {
            if (h_adj[v].size() == 1) endpoints.push_back(v);
        }
        const bool is_cycle = endpoints.empty();
        int walk_from = is_cycle ? component.front() : endpoints.front();

        int current = walk_from;
        int forbidden_edge = -1;
        if (is_cycle) {
            // Deterministic direction: head for the smaller neighbour.
            const auto& options = h_adj[current];
            int other = options[0].first < options[1].first ? options[1].second : options[0].second;
            forbidden_edge = other;
        }
        int steps = 0;
        int plus_steps = 0;
        int minus_steps = 0;
        EdgeColour next = EdgeColour::Blue;
        while (true) {
            int chosen_edge = -1;
            int chosen_vertex = -1;
            for (const auto& [w, e] : h_adj[current]) {
                if (edge_done[e] || e == forbidden_edge) continue;
                chosen_edge = e;
                chosen_vertex = w;
                break;
            }
            forbidden_edge = -1;
            if (chosen_edge < 0) break;
            colouring.by_edge[chosen_edge] = next;
            next = next == EdgeColour::Blue ? EdgeColour::Green : EdgeColour::Blue;
            edge_done[chosen_edge] = 1;
            ++steps;
            // Signed step in walk direction, rescaled: must be +-h_mag.
            T signed_step = graph.edges()[chosen_edge].u == current ? delta(chosen_edge)
                                                                    : T(-delta(chosen_edge));
            (signed_step > NumTraits<T>::zero() ? plus_steps : minus_steps)++;
            current = chosen_vertex;
            if (is_cycle && current == walk_from) break;
        }
        if (is_cycle) {
            colouring.h_cycle_lengths.push_back(steps);
            if (steps % 2 != 0 || plus_steps != minus_steps) {
                throw Error("odd leftover cycle of length " + std::to_string(steps) +
                            " through " + to_string(graph.coord(walk_from)) +
                            "; the signed steps around a cycle must cancel");
            }
        }
    }
    return colouring;
}

}  // namespace twoended
