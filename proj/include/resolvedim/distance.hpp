#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "resolvedim/graph.hpp"

namespace resolvedim {

/// Sentinel for unreachable vertex pairs. Never used in arithmetic.
constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

/// All-pairs shortest-path hop counts from BFS at every source, plus
/// per-vertex eccentricity. Eccentricity is kInfiniteDistance on
/// disconnected graphs.
struct DistanceMatrix {
    int n = 0;
    std::vector<int> dist; // n*n row-major
    std::vector<int> ecc;

    int at(int u, int v) const { return dist[static_cast<size_t>(u) * n + v]; }
    bool connected() const { return connected_; }

    friend DistanceMatrix distance_matrix(const Graph& g);

private:
    bool connected_ = false;
};

DistanceMatrix distance_matrix(const Graph& g);

/// Throws DisconnectedError on graphs with unreachable pairs.
int diameter(const DistanceMatrix& dm);
int eccentricity(const DistanceMatrix& dm, int u);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Shells N_0(u)={u}, N_1(u), ..., N_ecc(u)(u): a partition of V by
/// distance from u. Throws DisconnectedError.
std::vector<std::vector<int>> neighborhood_shells(const DistanceMatrix& dm, int u);

} // namespace resolvedim
