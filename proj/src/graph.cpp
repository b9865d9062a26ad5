#include "resolvedim/graph.hpp"

#include <algorithm>
#include <string>

#include "resolvedim/errors.hpp"

namespace resolvedim {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1)
        throw IndexOutOfRangeError("vertex count must be at least 1, got " + std::to_string(n));
    std::vector<std::pair<int, int>> normalized;
    normalized.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw IndexOutOfRangeError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                       ") outside [0, " + std::to_string(n) + ")");
        if (u == v)
            throw SelfLoopError("self-loop at vertex " + std::to_string(u));
        normalized.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
    return Graph(n, std::move(normalized));
}

Graph::Graph(int n, std::vector<std::pair<int, int>> normalized_edges)
    : n_(n), edges_(std::move(normalized_edges)) {
    std::vector<int> deg(n_, 0);
    for (auto [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    adj_off_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v)
        adj_off_[v + 1] = adj_off_[v] + deg[v];
    adj_flat_.resize(adj_off_[n_]);
    std::vector<int> cursor(adj_off_.begin(), adj_off_.end() - 1);
    for (auto [u, v] : edges_) {
        adj_flat_[cursor[u]++] = v;
        adj_flat_[cursor[v]++] = u;
    }
    for (int v = 0; v < n_; ++v)
        std::sort(adj_flat_.begin() + adj_off_[v], adj_flat_.begin() + adj_off_[v + 1]);
}

bool Graph::has_edge(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

} // namespace resolvedim
