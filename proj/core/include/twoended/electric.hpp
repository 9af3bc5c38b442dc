#pragma once

#include <string>
#include <vector>

#include "twoended/cut.hpp"
#include "twoended/fields.hpp"
#include "twoended/graph.hpp"
#include "twoended/linear_solve.hpp"
#include "twoended/numeric.hpp"

namespace twoended {

// Net flow of f out of x.
template <typename T>
T net_out(const EdgeField<T>& f, int x) {
    T total = NumTraits<T>::zero();
    const Graph& g = f.graph();
    for (int y : g.neighbors(x)) {
        total += f.value(x, y);
    }
    return total;
}

// Worst node-law violation over all vertices outside `exclude`.
template <typename T>
T knl_residual(const EdgeField<T>& f, const std::vector<int>& exclude = {}) {
    std::vector<char> skip(f.graph().vertex_count(), 0);
    for (int v : exclude) skip[v] = 1;
    T worst = NumTraits<T>::zero();
    for (int v = 0; v < f.graph().vertex_count(); ++v) {
        if (skip[v]) continue;
        T r = NumTraits<T>::abs(net_out(f, v));
        if (r > worst) worst = r;
    }
    return worst;
}

namespace detail {

// BFS spanning tree from vertex 0: parent[v] and the set of non-tree edges.
struct SpanningTree {
    std::vector<int> parent;
    std::vector<int> order;          // BFS order, root first
    std::vector<int> non_tree_edges; // edge ids
};

SpanningTree spanning_tree(const Graph& g);

// Tree potential with psi(root) = 0 and f = d(psi) on tree edges.
template <typename T>
std::vector<T> tree_potential(const EdgeField<T>& f, const SpanningTree& tree) {
    std::vector<T> psi(f.graph().vertex_count(), NumTraits<T>::zero());
    for (int v : tree.order) {
        if (tree.parent[v] >= 0) {
            psi[v] = psi[tree.parent[v]] - f.value(tree.parent[v], v);
        }
    }
    return psi;
}

}  // namespace detail

// Worst cycle-law violation over a fundamental cycle basis; 0 iff f has an
// Ohm dual. Every cycle sum is a combination of basis sums, so the basis
// suffices. Requires a connected carrier.
template <typename T>
T kcl_residual(const EdgeField<T>& f) {
    const Graph& g = f.graph();
    if (!g.connected()) {
        throw PreconditionError("cycle-law residual needs a connected carrier");
    }
    auto tree = detail::spanning_tree(g);
    auto psi = detail::tree_potential(f, tree);
    T worst = NumTraits<T>::zero();
    for (int id : tree.non_tree_edges) {
        const auto& e = g.edges()[id];
        T r = NumTraits<T>::abs(f.by_edge(id) - (psi[e.u] - psi[e.v]));
        if (r > worst) worst = r;
    }
    return worst;
}

// Potential u with u(origin) = anchor and i = d(u), computed by spanning-tree
// propagation. Unique given the anchor. Throws CycleLawError naming the worst
// basis cycle when the cycle law fails beyond tol.
template <typename T>
VertexField<T> ohm_dual_vertex(const EdgeField<T>& i, int origin, const T& anchor,
                               double tol_override = -1.0) {
    const Graph& g = i.graph();
    if (!g.connected()) {
        throw PreconditionError("Ohm dual needs a connected carrier");
    }
    const T tol = tol_override >= 0 ? NumTraits<T>::from_tolerance(tol_override)
                                    : NumTraits<T>::solver_tolerance();
    auto tree = detail::spanning_tree(g);
    auto psi = detail::tree_potential(i, tree);
    for (int id : tree.non_tree_edges) {
        const auto& e = g.edges()[id];
        T r = NumTraits<T>::abs(i.by_edge(id) - (psi[e.u] - psi[e.v]));
        if (r > tol) {
            throw CycleLawError("cycle law violated: worst basis cycle closes over edge " +
                                to_string(g.coord(e.u)) + " -- " + to_string(g.coord(e.v)) +
                                " with residual " + NumTraits<T>::to_string(r));
        }
    }
    VertexField<T> u(i.graph_ptr());
    const T shift = anchor - psi[origin];
    for (int v = 0; v < g.vertex_count(); ++v) {
        u[v] = psi[v] + shift;
    }
    return u;
}

// The unit-intensity electrical current from p to q: solve the grounded
// graph-Laplacian system L u = chi_p - chi_q with u(q) = 0, return i = d(u).
template <typename T>
EdgeField<T> unit_current(const GraphPtr& g, int p, int q) {
    if (p == q) {
        throw SolverError("unit current needs distinct terminals");
    }
    if (!g->connected()) {
        throw SolverError("unit current needs a connected carrier");
    }
    const int n = g->vertex_count();
    std::vector<int> var(n, -1);
    for (int v = 0, idx = 0; v < n; ++v) {
        if (v != q) var[v] = idx++;
    }
    int bandwidth = 0;
    for (const auto& e : g->edges()) {
        if (e.u == q || e.v == q) continue;
        bandwidth = std::max(bandwidth, var[e.v] - var[e.u]);
    }
    BandedSpdSystem<T> sys(n - 1, bandwidth);
    for (int v = 0; v < n; ++v) {
        if (v == q) continue;
        sys.at(var[v], var[v]) = NumTraits<T>::from_int(g->degree(v));
    }
    for (const auto& e : g->edges()) {
        if (e.u == q || e.v == q) continue;
        sys.at(var[e.u], var[e.v]) = NumTraits<T>::from_int(-1);
        sys.at(var[e.v], var[e.u]) = NumTraits<T>::from_int(-1);
    }
    sys.rhs(var[p]) = NumTraits<T>::one();

    auto solved = sys.solve();
    VertexField<T> u(g);
    for (int v = 0; v < n; ++v) {
        u[v] = v == q ? NumTraits<T>::zero() : solved[var[v]];
    }
    return gradient(u);
}

// Worst deviation from the neighbour-averaging identity over the vertices in
// region. Every region vertex must carry its full infinite-graph degree.
template <typename T>
T harmonic_residual(const VertexField<T>& u, const std::vector<int>& region) {
    const Graph& g = u.graph();
    T worst = NumTraits<T>::zero();
    for (int v : region) {
        if (!g.is_interior(v)) {
            throw PreconditionError("harmonic residual at " + to_string(g.coord(v)) +
                                    ", whose truncated degree is below its true degree");
        }
        T sum = NumTraits<T>::zero();
        for (int y : g.neighbors(v)) {
            sum += u[y];
        }
        T r = NumTraits<T>::abs(u[v] - sum / NumTraits<T>::from_int(g.degree(v)));
        if (r > worst) worst = r;
    }
    return worst;
}

struct MaximumPrincipleReport {
    bool pass = false;
    std::string detail;
};

// Passes iff u is constant or neither extremum over the carrier is attained
// inside region. Throws PreconditionError when u is not harmonic on region.
template <typename T>
MaximumPrincipleReport maximum_principle_check(const VertexField<T>& u,
                                               const std::vector<int>& region,
                                               double tol = -1.0) {
    const Graph& g = u.graph();
    T residual = harmonic_residual(u, region);
    const T bound = tol >= 0 ? NumTraits<T>::from_tolerance(tol) : NumTraits<T>::solver_tolerance();
    if (residual > bound) {
        throw PreconditionError("maximum principle check needs u harmonic on the region, residual " +
                                NumTraits<T>::to_string(residual));
    }
    T lo = u[0];
    T hi = u[0];
    for (int v = 1; v < g.vertex_count(); ++v) {
        if (u[v] < lo) lo = u[v];
        if (u[v] > hi) hi = u[v];
    }
    if (lo == hi) {
        return {true, "constant"};
    }
    for (int v : region) {
        if (u[v] == lo || u[v] == hi) {
            return {false, "extremum attained at interior vertex " + to_string(g.coord(v))};
        }
    }
    return {true, "extrema only outside the region"};
}

}  // namespace twoended
