#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resolvedim/graph.hpp"
#include "resolvedim/resolving.hpp"

namespace resolvedim {

/// Graph from an adjacency bitmask over the C(n,2) pair universe in
/// lexicographic pair order.
Graph graph_from_adjacency_mask(int n, uint64_t mask);

/// Streams every connected graph on n labeled vertices exactly once, in
/// ascending adjacency-mask order. With dedup, only masks that are their
/// own canonical form (minimum over all vertex permutations) are emitted,
/// one representative per isomorphism class. Labeled enumeration walks
/// 2^C(n,2) masks, so n is capped at 8.
void for_each_connected_graph(int n, bool dedup, const std::function<void(const Graph&)>& visit);

struct Violation {
    std::string graph6;
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    std::string range;
    uint64_t examined = 0;
    uint64_t skipped = 0;
    std::vector<Violation> violations;
    std::chrono::milliseconds elapsed{0};
    std::map<std::string, long long> info;

    bool passed() const { return violations.empty(); }
};

struct EnumOptions {
    int threads = 1;
    /// Newline-delimited graph6 stream checked instead of the internal
    /// enumeration ('#' comment lines and blanks skipped, disconnected
    /// entries counted as skipped).
    std::istream* corpus = nullptr;
    std::string corpus_name;
};

/// Theorem: randomly k-dimensional holds exactly for complete graphs and
/// odd cycles. Every hit with k = 3 must additionally be 3-regular with
/// n in {4, 7, 10}, satisfy the shell identity at every vertex, and give
/// each pair a unique non-resolved partner pair.
VerificationReport verify_characterization(int n_max, const EnumOptions& opts = {});

/// d(G) <= 3 res(G) - 5 for connected graphs with res >= 3 that are not
/// even cycles; even cycles and res <= 2 graphs are skipped per the
/// hypothesis.
VerificationReport verify_diameter_bound(int n_max, const EnumOptions& opts = {});

/// n <= d^dim + dim and n <= d^res + res; also reports the finiteness
/// bounds (3a-5)^a + a for a in {4, 5, 6}.
VerificationReport verify_order_bound(int n_max, const EnumOptions& opts = {});

struct FamilyRanges {
    int l_min = 2, l_max = 4;
    int m_min = 2, m_max = 3;
    int p_min = 1, p_max = 3;
};

/// Exact solvers against predicted_parameters for every H / Hm / tildeH /
/// tildeHm spec in the ranges, canonical-set minimality with the claimed
/// size, path-extension preservation, and inverse_realization round trips
/// for every reachable (a, b). Hm/tilde specs with l = 2 are exercised as
/// rejection checks: their formulas are out of domain.
VerificationReport verify_family_formulas(const FamilyRanges& ranges, const SearchCaps& caps = {},
                                          int threads = 1);

/// (3a-5)^a + a: the order bound chain behind the finiteness theorem for
/// resolving number a.
uint64_t finiteness_bound(int a);

} // namespace resolvedim
