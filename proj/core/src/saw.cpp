#include "twoended/saw.hpp"

#include <cmath>
#include <string>

namespace twoended {

namespace {

void enumerate(const Graph& g, int v, int depth, int max_length, std::vector<char>& visited,
               std::vector<BigInt>& counts) {
    for (int w : g.neighbors(v)) {
        if (visited[w]) continue;
        ++counts[depth];
        if (depth + 1 < max_length) {
            visited[w] = 1;
            enumerate(g, w, depth + 1, max_length, visited, counts);
            visited[w] = 0;
        }
    }
}

}  // namespace

SawCounts count_saws(const LayeredSpec& spec, int origin_pos, int max_length, int window_radius) {
    spec.validate();
    if (max_length < 1) {
        throw PreconditionError("walk length bound must be at least 1");
    }
    if (window_radius < 0) {
        window_radius = max_length + 1;
    } else if (window_radius < max_length + 1) {
        throw TruncationError("window radius " + std::to_string(window_radius) +
                              " is below max walk length + 1 = " + std::to_string(max_length + 1) +
                              "; walks could feel the truncation");
    }
    auto g = expand(spec, -window_radius, window_radius, origin_pos);
    SawCounts out;
    out.origin = g->coord(g->origin());
    out.max_length = max_length;
    out.window_radius = window_radius;
    out.counts.assign(max_length, BigInt(0));

    std::vector<char> visited(g->vertex_count(), 0);
    visited[g->origin()] = 1;
    enumerate(*g, g->origin(), 0, max_length, visited, out.counts);
    return out;
}

std::vector<MuEstimate> mu_estimates(const SawCounts& counts) {
    if (counts.max_length < 2) {
        throw PreconditionError("growth estimates need counts up to length 2");
    }
    std::vector<MuEstimate> out;
    for (int n = 1; n <= counts.max_length; ++n) {
        MuEstimate e;
        e.n = n;
        const double log_cn = std::log(counts.counts[n - 1].get_d());
        e.nth_root = std::exp(log_cn / n);
        if (n < counts.max_length && counts.counts[n - 1] > 0) {
            e.has_ratio = true;
            e.ratio = BigInt(counts.counts[n]).get_d() / counts.counts[n - 1].get_d();
        }
        out.push_back(e);
    }
    return out;
}

double golden_mean() { return (1.0 + std::sqrt(5.0)) / 2.0; }

GoldenReport golden_check(const std::vector<MuEstimate>& estimates) {
    GoldenReport rep;
    rep.phi = golden_mean();
    rep.consistent = true;
    bool first = true;
    for (const auto& e : estimates) {
        if (e.n < 2) continue;
        if (first || e.nth_root < rep.min_root) {
            rep.min_root = e.nth_root;
            rep.min_root_n = e.n;
            first = false;
        }
        if (e.nth_root < rep.phi) rep.consistent = false;
    }
    return rep;
}

}  // namespace twoended
