#pragma once

#include <span>
#include <utility>
#include <vector>

namespace resolvedim {

/// Immutable simple undirected graph over dense vertex indices 0..n-1.
/// Edges are stored normalized (u < v), sorted and deduplicated; adjacency
/// lists are sorted. Safe to share across threads once constructed.
class Graph {
public:
    /// Validates and normalizes an edge list. Throws IndexOutOfRangeError
    /// when an endpoint is outside [0, n) and SelfLoopError on u == v.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::span<const int> neighbors(int v) const {
        return {adj_flat_.data() + adj_off_[v], adj_flat_.data() + adj_off_[v + 1]};
    }

    int degree(int v) const { return adj_off_[v + 1] - adj_off_[v]; }

    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    Graph(int n, std::vector<std::pair<int, int>> normalized_edges);

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> adj_flat_;
    std::vector<int> adj_off_;
};

bool is_connected(const Graph& g);

} // namespace resolvedim
