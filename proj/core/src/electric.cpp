#include "twoended/electric.hpp"

#include <queue>

namespace twoended::detail {

SpanningTree spanning_tree(const Graph& g) {
    SpanningTree tree;
    tree.parent.assign(g.vertex_count(), -1);
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<char> in_tree(g.edge_count(), 0);
    std::queue<int> queue;
    seen[0] = 1;
    queue.push(0);
    tree.order.push_back(0);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                tree.parent[w] = v;
                in_tree[g.edge_index(v, w)->first] = 1;
                tree.order.push_back(w);
                queue.push(w);
            }
        }
    }
    for (int id = 0; id < g.edge_count(); ++id) {
        if (!in_tree[id]) tree.non_tree_edges.push_back(id);
    }
    return tree;
}

}  // namespace twoended::detail
