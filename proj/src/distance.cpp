#include "resolvedim/distance.hpp"

#include <algorithm>
#include <string>

#include "resolvedim/errors.hpp"

namespace resolvedim {

DistanceMatrix distance_matrix(const Graph& g) {
    const int n = g.vertex_count();
    DistanceMatrix dm;
    dm.n = n;
    dm.dist.assign(static_cast<size_t>(n) * n, kInfiniteDistance);
    dm.ecc.assign(n, 0);
    dm.connected_ = true;

    std::vector<int> queue(n);
    for (int src = 0; src < n; ++src) {
        int* row = dm.dist.data() + static_cast<size_t>(src) * n;
        row[src] = 0;
        int head = 0, tail = 0;
        queue[tail++] = src;
        while (head < tail) {
            int v = queue[head++];
            for (int w : g.neighbors(v)) {
                if (row[w] == kInfiniteDistance) {
                    row[w] = row[v] + 1;
                    queue[tail++] = w;
                }
            }
        }
        if (tail < n) {
            dm.connected_ = false;
            dm.ecc[src] = kInfiniteDistance;
        } else {
            dm.ecc[src] = *std::max_element(row, row + n);
        }
    }
    return dm;
}

int diameter(const DistanceMatrix& dm) {
    if (!dm.connected())
        throw DisconnectedError("diameter is undefined on a disconnected graph");
    return *std::max_element(dm.ecc.begin(), dm.ecc.end());
}

int eccentricity(const DistanceMatrix& dm, int u) {
    if (!dm.connected())
        throw DisconnectedError("eccentricity is undefined on a disconnected graph");
    return dm.ecc[u];
}

std::optional<int> girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = kInfiniteDistance;
    std::vector<int> dist(n), parent(n), queue(n);
    // BFS from every root; a non-tree edge (v, w) closes a cycle of length
    // dist[v] + dist[w] + 1 through the root. The minimum over all roots is
    // exact: for a shortest cycle, BFS from any of its vertices sees it.
    for (int src = 0; src < n && best > 3; ++src) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        parent[src] = -1;
        int head = 0, tail = 0;
        queue[tail++] = src;
        while (head < tail) {
            int v = queue[head++];
            if (2 * dist[v] >= best)
                break;
            for (int w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue[tail++] = w;
                } else if (w != parent[v]) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if (best == kInfiniteDistance)
        return std::nullopt;
    return best;
}

std::vector<std::vector<int>> neighborhood_shells(const DistanceMatrix& dm, int u) {
    if (!dm.connected())
        throw DisconnectedError("shells are undefined on a disconnected graph");
    std::vector<std::vector<int>> shells(dm.ecc[u] + 1);
    for (int v = 0; v < dm.n; ++v)
        shells[dm.at(u, v)].push_back(v);
    return shells;
}

} // namespace resolvedim
