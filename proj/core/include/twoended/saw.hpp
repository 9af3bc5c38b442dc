#pragma once

#include <vector>

#include "twoended/graph.hpp"
#include "twoended/layered_spec.hpp"
#include "twoended/numeric.hpp"

namespace twoended {

// Exact self-avoiding-walk counts from a fixed origin: counts[i] is the
// number of walks with i+1 edges.
struct SawCounts {
    VertexId origin;
    int max_length = 0;
    std::vector<BigInt> counts;
    int window_radius = 0;
};

// Exhaustive depth-first enumeration with a visited set. window_radius < 0
// picks the smallest safe truncation (max_length + 1); anything smaller than
// that is rejected, since a walk of length n can reach B_n.
SawCounts count_saws(const LayeredSpec& spec, int origin_pos, int max_length,
                     int window_radius = -1);

struct MuEstimate {
    int n = 0;
    double nth_root = 0.0;  // c_n^{1/n}
    bool has_ratio = false;
    double ratio = 0.0;     // c_{n+1} / c_n
};

std::vector<MuEstimate> mu_estimates(const SawCounts& counts);

// (1 + sqrt 5) / 2.
double golden_mean();

struct GoldenReport {
    bool consistent = false;  // finite-n evidence compatible with mu >= phi
    double min_root = 0.0;
    int min_root_n = 0;
    double phi = 0.0;
};

// Passes iff c_n^{1/n} >= phi for every 2 <= n <= N. Finite counts prove no
// bound; a fail only flags evidence against, as on the 2-way infinite path.
GoldenReport golden_check(const std::vector<MuEstimate>& estimates);

}  // namespace twoended
