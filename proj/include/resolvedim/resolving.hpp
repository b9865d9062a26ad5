#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "resolvedim/distance.hpp"
#include "resolvedim/graph.hpp"

namespace resolvedim {

/// Unordered vertex pair, normalized to x < y.
struct VertexPair {
    int x = 0;
    int y = 1;

    VertexPair() = default;
    VertexPair(int a, int b);

    auto operator<=>(const VertexPair&) const = default;
};

/// Exact-search guardrails. Configuration, not hard constants: callers may
/// raise them, the defaults keep desk-scale runs from exploding.
struct SearchCaps {
    int dim_max_n = 40;
    int dim_plus_max_n = 30;
    int brute_res_max_n = 20;
};

/// d(v, p.x) != d(v, p.y).
bool resolves(const DistanceMatrix& dm, int v, VertexPair p);

/// R(x,y): every vertex resolving the pair, in sorted index order.
/// Always contains x and y.
std::vector<int> resolver_set(const DistanceMatrix& dm, VertexPair p);

bool is_resolving_set(const DistanceMatrix& dm, std::span<const int> s);

/// Pairs no member of s resolves, in lexicographic order.
std::vector<VertexPair> unresolved_pairs(const DistanceMatrix& dm, std::span<const int> s);

/// Smallest resolving-set size together with the lexicographically
/// smallest witness basis. Subsets are searched in size-then-lex order
/// with bitset signature pruning.
std::pair<int, std::vector<int>> metric_dimension(const Graph& g, const SearchCaps& caps = {},
                                                  int threads = 1);

/// res(G) = 1 + max over pairs of |V \ R(x,y)|, with the lexicographically
/// first pair attaining the maximum. A k-subset fails to resolve exactly
/// when it fits inside some pair's non-resolver set.
std::pair<int, VertexPair> resolving_number_closed(const DistanceMatrix& dm);

/// Literal definition: the smallest k such that all C(n,k) subsets
/// resolve. Oracle-scale only; must agree with resolving_number_closed.
int resolving_number_bruteforce(const Graph& g, const SearchCaps& caps = {});

/// s resolves and no proper subset of s does.
bool is_minimal_resolving_set(const DistanceMatrix& dm, std::span<const int> s);

/// Largest size of a minimal resolving set plus the lexicographically
/// smallest witness. Scans sizes res(G), res(G)-1, ... downward, since
/// dim+ <= res.
std::pair<int, std::vector<int>> upper_dimension(const Graph& g, const SearchCaps& caps = {},
                                                 int threads = 1);

/// k = dim(G) when dim(G) = res(G), absent otherwise.
std::optional<int> is_randomly_k_dimensional(const Graph& g, const SearchCaps& caps = {},
                                             int threads = 1);

/// Sum over shells of C(|N_i(u)|, 2) and whether it equals n-1. The
/// identity holds at every vertex of a randomly 3-dimensional graph.
std::pair<bool, long long> shell_identity_check(const Graph& g, int u);

/// Pairs resolved by exactly one vertex of s, mapped to that vertex.
/// Throws NotResolvingError when s is not a resolving set.
std::map<VertexPair, int> s_unique_pairs(const DistanceMatrix& dm, std::span<const int> s);

/// Which parameters compute_report should fill in.
struct ReportSelection {
    bool dim = true;
    bool dim_plus = true;
    bool res = true;
};

struct ResolvingReport {
    int n = 0;
    std::optional<int> dim;
    std::optional<std::vector<int>> metric_basis;
    std::optional<int> dim_plus;
    std::optional<std::vector<int>> upper_basis;
    std::optional<int> res;
    std::optional<VertexPair> res_witness;
    std::optional<int> randomly_k;
};

ResolvingReport compute_report(const Graph& g, const ReportSelection& sel = {},
                               const SearchCaps& caps = {}, int threads = 1);

} // namespace resolvedim
