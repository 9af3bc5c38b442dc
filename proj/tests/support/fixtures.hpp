#pragma once

#include <algorithm>
#include <vector>

#include "twoended/builtin_specs.hpp"
#include "twoended/graph.hpp"
#include "twoended/numeric.hpp"

namespace testsupport {

// Cubic layered spec whose canonical harmonic function has three distinct
// gradient magnitudes (1, 3 and 4 before normalisation): each layer carries
// six "A" positions 0..5 and six "B" positions 6..11, g(n, k) = 6n + (k mod 6).
inline twoended::LayeredSpec case3_spec() {
    twoended::LayeredSpec spec;
    spec.layer_size = 12;
    spec.intra = {{0, 10}, {1, 11}, {1, 6}, {2, 7}, {3, 8},
                  {4, 9},  {5, 10}, {3, 6}, {4, 7}, {5, 8}};
    spec.cross = {{2, 6}, {3, 7}, {4, 8}, {5, 9}, {11, 0}, {9, 0}, {10, 1}, {11, 2}};
    return spec;
}

// Independent self-avoiding-walk enumerator: breadth-first extension of
// explicit path lists with linear-scan membership, no shared code with the
// production counter.
inline std::vector<twoended::BigInt> saw_counts_oracle(const twoended::Graph& g, int origin,
                                                       int max_length) {
    std::vector<std::vector<int>> frontier{{origin}};
    std::vector<twoended::BigInt> counts;
    for (int len = 1; len <= max_length; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& path : frontier) {
            for (int w : g.neighbors(path.back())) {
                if (std::find(path.begin(), path.end(), w) == path.end()) {
                    auto extended = path;
                    extended.push_back(w);
                    next.push_back(std::move(extended));
                }
            }
        }
        counts.emplace_back(static_cast<long>(next.size()));
        frontier = std::move(next);
    }
    return counts;
}

}  // namespace testsupport
