#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "twoended/ball_view.hpp"
#include "twoended/cut.hpp"
#include "twoended/electric.hpp"
#include "twoended/fields.hpp"
#include "twoended/graph.hpp"
#include "twoended/layered_spec.hpp"
#include "twoended/linear_solve.hpp"

namespace twoended {

// Terminal selection inside L_n / L_{-n}. Fixed tie-breaks keep runs
// reproducible; the alternative order exists so independent runs can be
// compared.
enum class TieBreak { SmallestPos, LargestPos };

struct LimitOptions {
    int probe_radius = 3;
    double eps = 1e-8;
    int max_radius = 64;
    // Empty = default geometric schedule n0 + 2^i (entries below probe_radius
    // dropped, the cap appended). A custom schedule must be strictly
    // increasing with every entry above both n0 and probe_radius.
    std::vector<int> schedule;
    TieBreak tie_break = TieBreak::SmallestPos;
};

template <typename T>
struct LimitStep {
    int radius = 0;
    VertexId p;
    VertexId q;
    bool has_diff = false;
    T sup_diff = NumTraits<T>::zero();
    // h_n restricted to the probe ball, keyed by coordinates.
    std::vector<std::pair<VertexId, T>> probe_values;
};

// One limit construction: ball currents of intensity 1 along the radius
// schedule, stopped when two consecutive potentials agree on the probe ball.
template <typename T>
struct LimitRun {
    int probe_radius = 0;
    double eps = 0.0;
    int n0 = 0;
    std::vector<int> schedule;
    std::vector<LimitStep<T>> steps;
    bool converged = false;
    int converged_radius = -1;

    GraphPtr ball;               // final B_n as an induced graph
    VertexField<T> h;            // Ohm dual with h(origin) = 0
    std::vector<int> probe;      // ball-local ids of B_{probe_radius}
    T lipschitz = NumTraits<T>::zero();      // max |dh| over all ball edges
    T cut_flow_upper = NumTraits<T>::zero(); // layer-0 cut, X = upper side
    T probe_residual = NumTraits<T>::zero(); // harmonic residual over the probe

    VertexField<T> probe_restriction() const;
};

template <typename T>
LimitRun<T> limit_harmonic(const LayeredSpec& spec, int origin_pos, const LimitOptions& opt = {});

// Closed form of the canonical Lipschitz harmonic function on a layered spec:
// the layer shift is an automorphism, so h(n, k) = alpha * n + beta_k.
// Normalised to beta[origin_pos] = 0 and unit flow through a layer cut from
// the upper side to the lower one (alpha > 0 for the shipped specs).
template <typename T>
struct PeriodicForm {
    T alpha = NumTraits<T>::zero();
    std::vector<T> beta;
    int origin_pos = 0;

    T value(VertexId v) const { return alpha * NumTraits<T>::from_int(v.layer) + beta[v.pos]; }
};

template <typename T>
PeriodicForm<T> periodic_harmonic(const LayeredSpec& spec, int origin_pos);

template <typename T>
VertexField<T> materialize(const PeriodicForm<T>& form, const GraphPtr& g) {
    VertexField<T> h(g);
    for (int v = 0; v < g->vertex_count(); ++v) {
        h[v] = form.value(g->coord(v));
    }
    return h;
}

struct CutFlowEntry {
    double flow = 0.0;
    std::string flow_exact;
    bool x_holds_upper = false;
};

struct CutInvarianceReport {
    bool pass = false;
    std::vector<CutFlowEntry> flows;
    double max_discrepancy = 0.0;
    std::string detail;
};

// Checks |dh(X, Y)| equal across end-separating cuts, signs consistent with
// which end each X side contains. Throws on a non-separating cut and when a
// node-law violation sits between two of the cuts.
template <typename T>
CutInvarianceReport verify_cut_invariance(const VertexField<T>& h, const std::vector<Cut>& cuts,
                                          double tol = 1e-9);

template <typename T>
struct AffineFit {
    T alpha = NumTraits<T>::zero();
    T beta = NumTraits<T>::zero();
    T residual = NumTraits<T>::zero();  // sup-norm over the common carrier
    int sample_count = 0;
};

// Least-squares fit h2 ~ alpha * h1 + beta over the coordinate-wise common
// carrier. Throws when h1 is constant there.
template <typename T>
AffineFit<T> affine_fit(const VertexField<T>& h1, const VertexField<T>& h2);

template <typename T>
struct ZeroFlowReport {
    T flow_abs = NumTraits<T>::zero();
    T variation = NumTraits<T>::zero();
    bool consistent = false;
};

// Reports (|cut flow|, sup variation); zero flow together with non-constant
// values is flagged inconsistent.
template <typename T>
ZeroFlowReport<T> zero_flow_implies_constant_check(const VertexField<T>& h, const Cut& c,
                                                   double tol = 1e-9) {
    ZeroFlowReport<T> rep;
    rep.flow_abs = NumTraits<T>::abs(cut_flow(gradient(h), c));
    T lo = h[0];
    T hi = h[0];
    for (int v = 1; v < h.size(); ++v) {
        if (h[v] < lo) lo = h[v];
        if (h[v] > hi) hi = h[v];
    }
    rep.variation = hi - lo;
    rep.consistent = !(within_tolerance(rep.flow_abs, tol) && !within_tolerance(rep.variation, tol));
    return rep;
}

// --- implementation ---

template <typename T>
VertexField<T> LimitRun<T>::probe_restriction() const {
    VertexField<T> out(ball->induced(probe));
    for (int v = 0; v < out.size(); ++v) {
        out[v] = h[ball->require_index(out.graph().coord(v))];
    }
    return out;
}

namespace detail {

std::vector<int> default_schedule(int n0, int probe_radius, int max_radius);
void check_schedule(const std::vector<int>& schedule, int n0, int probe_radius);
int find_n0(const LayeredSpec& spec, int origin_pos, int max_radius);
int pick_terminal(const Graph& g, const std::vector<int>& layer, TieBreak tb);

}  // namespace detail

template <typename T>
LimitRun<T> limit_harmonic(const LayeredSpec& spec, int origin_pos, const LimitOptions& opt) {
    spec.validate();
    if (opt.probe_radius < 0 || opt.eps < 0) {
        throw PreconditionError("limit construction needs probe radius >= 0 and eps >= 0");
    }
    LimitRun<T> run;
    run.probe_radius = opt.probe_radius;
    run.eps = opt.eps;
    run.n0 = detail::find_n0(spec, origin_pos, opt.max_radius);
    run.schedule = opt.schedule.empty()
                       ? detail::default_schedule(run.n0, opt.probe_radius, opt.max_radius)
                       : opt.schedule;
    detail::check_schedule(run.schedule, run.n0, opt.probe_radius);

    const T eps = NumTraits<T>::from_tolerance(opt.eps);
    std::map<VertexId, T> prev;

    for (int radius : run.schedule) {
        auto g = expand(spec, -(radius + 2), radius + 2, origin_pos);
        auto bv = ball_view(g, radius);
        if (bv.upper_layer.empty() || bv.lower_layer.empty()) {
            throw TruncationError("empty terminal layer at radius " + std::to_string(radius));
        }
        const int p = detail::pick_terminal(*g, bv.upper_layer, opt.tie_break);
        const int q = detail::pick_terminal(*g, bv.lower_layer, opt.tie_break);
        if (p == q) {
            throw PreconditionError("terminal layers meet at radius " + std::to_string(radius) +
                                    "; radius must exceed n0 = " + std::to_string(run.n0));
        }
        auto ball = g->induced(bv.ball);
        auto i = unit_current<T>(ball, ball->require_index(g->coord(p)),
                                 ball->require_index(g->coord(q)));
        auto h = ohm_dual_vertex<T>(i, ball->origin(), NumTraits<T>::zero());

        std::map<VertexId, T> cur;
        std::vector<int> probe_ids;
        for (int v : bv.ball) {
            if (bv.dist[v] <= opt.probe_radius) {
                VertexId id = g->coord(v);
                cur.emplace(id, h[ball->require_index(id)]);
                probe_ids.push_back(ball->require_index(id));
            }
        }

        LimitStep<T> step;
        step.radius = radius;
        step.p = g->coord(p);
        step.q = g->coord(q);
        step.probe_values.assign(cur.begin(), cur.end());
        if (!prev.empty()) {
            step.has_diff = true;
            for (const auto& [id, value] : cur) {
                T d = NumTraits<T>::abs(value - prev.at(id));
                if (d > step.sup_diff) step.sup_diff = d;
            }
        }
        run.steps.push_back(step);

        if (step.has_diff && step.sup_diff <= eps) {
            run.converged = true;
            run.converged_radius = radius;
            run.ball = ball;
            run.h = std::move(h);
            run.probe = std::move(probe_ids);
            std::sort(run.probe.begin(), run.probe.end());

            auto grad = gradient(run.h);
            for (int e = 0; e < grad.size(); ++e) {
                T a = NumTraits<T>::abs(grad.by_edge(e));
                if (a > run.lipschitz) run.lipschitz = a;
            }
            if (step.p.layer <= 0 || step.q.layer > 0) {
                throw PreconditionError("terminals do not straddle the layer-0 cut");
            }
            run.cut_flow_upper = cut_flow(grad, layer_cut(ball, 0, /*upper_as_x=*/true));
            run.probe_residual = harmonic_residual(run.h, run.probe);
            return run;
        }
        prev = std::move(cur);
    }

    std::ostringstream trace;
    trace << "schedule exhausted before the probe ball settled (eps=" << opt.eps << "); trace:";
    for (const auto& s : run.steps) {
        trace << " radius=" << s.radius << " diff="
              << (s.has_diff ? NumTraits<T>::to_string(s.sup_diff) : std::string("n/a"));
    }
    throw ConvergenceError(trace.str());
}

template <typename T>
PeriodicForm<T> periodic_harmonic(const LayeredSpec& spec, int origin_pos) {
    spec.validate();
    const int m = spec.layer_size;
    if (origin_pos < 0 || origin_pos >= m) {
        throw PreconditionError("origin position out of range");
    }
    // Unknowns beta_0..beta_{m-1}, alpha. Harmonic equations sum to zero, so
    // the one at the origin position is dropped in favour of the gauge
    // beta[origin] = 0 and the unit-flow normalisation.
    const int n = m + 1;
    std::vector<std::vector<T>> a(n, std::vector<T>(n, NumTraits<T>::zero()));
    std::vector<T> b(n, NumTraits<T>::zero());
    int row = 0;
    for (int k = 0; k < m; ++k) {
        if (k == origin_pos) continue;
        a[row][k] += NumTraits<T>::from_int(spec.full_degree(k));
        for (const auto& [x, y] : spec.intra) {
            if (x == k) a[row][y] -= NumTraits<T>::one();
            if (y == k) a[row][x] -= NumTraits<T>::one();
        }
        for (const auto& [j, jp] : spec.cross) {
            if (j == k) {  // up-neighbour (n+1, jp)
                a[row][jp] -= NumTraits<T>::one();
                a[row][m] -= NumTraits<T>::one();
            }
            if (jp == k) {  // down-neighbour (n-1, j)
                a[row][j] -= NumTraits<T>::one();
                a[row][m] += NumTraits<T>::one();
            }
        }
        ++row;
    }
    a[row][origin_pos] = NumTraits<T>::one();
    ++row;
    // Flow through the layer cut, upper side to lower: sum over cross edges of
    // h(1, j') - h(0, j) = alpha + beta_{j'} - beta_j, set to 1.
    for (const auto& [j, jp] : spec.cross) {
        a[row][m] += NumTraits<T>::one();
        a[row][jp] += NumTraits<T>::one();
        a[row][j] -= NumTraits<T>::one();
    }
    b[row] = NumTraits<T>::one();

    auto x = dense_solve<T>(std::move(a), std::move(b));
    PeriodicForm<T> form;
    form.alpha = x[m];
    form.beta.assign(x.begin(), x.begin() + m);
    form.origin_pos = origin_pos;
    return form;
}

template <typename T>
CutInvarianceReport verify_cut_invariance(const VertexField<T>& h, const std::vector<Cut>& cuts,
                                          double tol) {
    if (cuts.size() < 2) {
        throw PreconditionError("cut invariance needs at least two cuts");
    }
    const Graph& g = h.graph();
    for (const auto& c : cuts) {
        if (c.carrier.get() != h.graph_ptr().get()) {
            throw PreconditionError("cut on a different carrier");
        }
        if (!c.separates_ends()) {
            throw PreconditionError("non-separating cut supplied");
        }
    }
    auto grad = gradient(h);
    // The flows agree iff the node law holds at every vertex whose side
    // differs between two of the cuts (moving a vertex across shifts the flow
    // by its net out-flow).
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool first = cuts[0].in_x[v] == cuts[0].x_holds_upper_end();
        for (size_t c = 1; c < cuts.size(); ++c) {
            bool side = cuts[c].in_x[v] == cuts[c].x_holds_upper_end();
            if (side != first) {
                T r = NumTraits<T>::abs(net_out(grad, v));
                if (!within_tolerance(r, tol)) {
                    throw PreconditionError("node-law violation between cuts at " +
                                            to_string(g.coord(v)));
                }
                break;
            }
        }
    }

    CutInvarianceReport rep;
    std::vector<T> normalized;
    for (const auto& c : cuts) {
        T flow = cut_flow(grad, c);
        CutFlowEntry entry;
        entry.flow = NumTraits<T>::to_double(flow);
        entry.flow_exact = NumTraits<T>::to_string(flow);
        entry.x_holds_upper = c.x_holds_upper_end();
        rep.flows.push_back(entry);
        normalized.push_back(entry.x_holds_upper ? flow : T(-flow));
    }
    T worst = NumTraits<T>::zero();
    for (size_t i = 1; i < normalized.size(); ++i) {
        T d = NumTraits<T>::abs(normalized[i] - normalized[0]);
        if (d > worst) worst = d;
    }
    rep.max_discrepancy = NumTraits<T>::to_double(worst);
    rep.pass = within_tolerance(worst, tol);
    rep.detail = rep.pass ? "flows agree up to orientation"
                          : "flow mismatch " + NumTraits<T>::to_string(worst);
    return rep;
}

template <typename T>
AffineFit<T> affine_fit(const VertexField<T>& h1, const VertexField<T>& h2) {
    const Graph& g1 = h1.graph();
    const Graph& g2 = h2.graph();
    std::vector<std::pair<T, T>> samples;
    for (int v = 0; v < g1.vertex_count(); ++v) {
        if (auto w = g2.index_of(g1.coord(v))) {
            samples.emplace_back(h1[v], h2[*w]);
        }
    }
    if (samples.size() < 2) {
        throw PreconditionError("affine fit needs at least two common vertices");
    }
    const T count = NumTraits<T>::from_int(static_cast<long>(samples.size()));
    T mean1 = NumTraits<T>::zero();
    T mean2 = NumTraits<T>::zero();
    for (const auto& [x, y] : samples) {
        mean1 += x;
        mean2 += y;
    }
    mean1 = mean1 / count;
    mean2 = mean2 / count;
    T var = NumTraits<T>::zero();
    T cov = NumTraits<T>::zero();
    for (const auto& [x, y] : samples) {
        var += (x - mean1) * (x - mean1);
        cov += (x - mean1) * (y - mean2);
    }
    if (var == NumTraits<T>::zero()) {
        throw PreconditionError("affine fit against a constant field is degenerate");
    }
    AffineFit<T> fit;
    fit.alpha = cov / var;
    fit.beta = mean2 - fit.alpha * mean1;
    for (const auto& [x, y] : samples) {
        T r = NumTraits<T>::abs(y - fit.alpha * x - fit.beta);
        if (r > fit.residual) fit.residual = r;
    }
    fit.sample_count = static_cast<int>(samples.size());
    return fit;
}

}  // namespace twoended
