#include "resolvedim/resolving.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "resolvedim/errors.hpp"
#include "resolvedim/threading.hpp"

namespace resolvedim {

namespace {

void require_connected(const DistanceMatrix& dm) {
    if (!dm.connected())
        throw DisconnectedError("resolving parameters require a connected graph");
}

void require_order(int n, int cap, const char* what) {
    if (n < 2)
        throw std::invalid_argument(std::string(what) + " requires at least 2 vertices");
    if (n > cap)
        throw TooLargeError(std::string(what) + " capped at n <= " + std::to_string(cap) +
                            ", got n = " + std::to_string(n));
}

// Lexicographic rank of the pair (x, y), x < y, among all C(n,2) pairs.
inline int pair_rank(int n, int x, int y) {
    return x * (n - 1) - x * (x - 1) / 2 + (y - x - 1);
}

// Per-vertex bitmasks over the C(n,2) pair universe: bit p of mask(v) is
// set when v resolves pair p. A subset resolves iff the OR of its masks
// covers every pair, which makes the subset searches word-parallel.
struct PairMasks {
    int n = 0;
    int words = 0;
    std::vector<uint64_t> full;
    std::vector<uint64_t> bits;

    const uint64_t* mask(int v) const { return bits.data() + static_cast<size_t>(v) * words; }
};

PairMasks build_pair_masks(const DistanceMatrix& dm) {
    PairMasks pm;
    pm.n = dm.n;
    const int pairs = dm.n * (dm.n - 1) / 2;
    pm.words = (pairs + 63) / 64;
    pm.full.assign(pm.words, 0);
    for (int p = 0; p < pairs; ++p)
        pm.full[p / 64] |= uint64_t{1} << (p % 64);
    pm.bits.assign(static_cast<size_t>(dm.n) * pm.words, 0);
    for (int v = 0; v < dm.n; ++v) {
        uint64_t* m = pm.bits.data() + static_cast<size_t>(v) * pm.words;
        int p = 0;
        for (int x = 0; x < dm.n; ++x) {
            const int dvx = dm.at(v, x);
            for (int y = x + 1; y < dm.n; ++y, ++p) {
                if (dvx != dm.at(v, y))
                    m[p / 64] |= uint64_t{1} << (p % 64);
            }
        }
    }
    return pm;
}

inline bool is_full(const uint64_t* acc, const PairMasks& pm) {
    for (int w = 0; w < pm.words; ++w)
        if (acc[w] != pm.full[w])
            return false;
    return true;
}

inline bool union_is_full(const uint64_t* a, const uint64_t* b, const PairMasks& pm) {
    for (int w = 0; w < pm.words; ++w)
        if ((a[w] | b[w]) != pm.full[w])
            return false;
    return true;
}

inline bool adds_bits(const uint64_t* acc, const uint64_t* m, int words) {
    for (int w = 0; w < words; ++w)
        if (m[w] & ~acc[w])
            return true;
    return false;
}

// OR of mask(v) for v in [i, n), indexed by i; entry n is all-zero.
std::vector<uint64_t> suffix_union(const PairMasks& pm) {
    std::vector<uint64_t> suf(static_cast<size_t>(pm.n + 1) * pm.words, 0);
    for (int v = pm.n - 1; v >= 0; --v) {
        const uint64_t* m = pm.mask(v);
        uint64_t* dst = suf.data() + static_cast<size_t>(v) * pm.words;
        const uint64_t* nxt = suf.data() + static_cast<size_t>(v + 1) * pm.words;
        for (int w = 0; w < pm.words; ++w)
            dst[w] = nxt[w] | m[w];
    }
    return suf;
}

// DFS in lex order over k-subsets with first element fixed to v0.
// `minimal` additionally requires the completed subset to be a minimal
// resolving set; in that mode prefixes that are already full, and picks
// that contribute no new pair, are pruned since no completion can be
// minimal.
struct SubsetSearch {
    const PairMasks& pm;
    const std::vector<uint64_t>& suffix;
    int k;
    bool minimal;
    std::vector<int> chosen;
    std::vector<uint64_t> acc; // (k+1) accumulator rows

    SubsetSearch(const PairMasks& pm_, const std::vector<uint64_t>& suffix_, int k_, bool minimal_)
        : pm(pm_), suffix(suffix_), k(k_), minimal(minimal_) {
        chosen.resize(k);
        acc.assign(static_cast<size_t>(k + 1) * pm.words, 0);
    }

    const uint64_t* row(int depth) const { return acc.data() + static_cast<size_t>(depth) * pm.words; }
    uint64_t* row(int depth) { return acc.data() + static_cast<size_t>(depth) * pm.words; }

    bool leaf_ok() {
        if (!is_full(row(k), pm))
            return false;
        if (!minimal)
            return true;
        // Leave-one-out coverage check from prefix/suffix unions of the
        // chosen masks.
        std::vector<uint64_t> suf(static_cast<size_t>(k + 1) * pm.words, 0);
        for (int i = k - 1; i >= 0; --i) {
            const uint64_t* m = pm.mask(chosen[i]);
            for (int w = 0; w < pm.words; ++w)
                suf[static_cast<size_t>(i) * pm.words + w] =
                    suf[static_cast<size_t>(i + 1) * pm.words + w] | m[w];
        }
        for (int i = 0; i < k; ++i) {
            if (union_is_full(row(i), suf.data() + static_cast<size_t>(i + 1) * pm.words, pm))
                return false; // chosen[i] is redundant
        }
        return true;
    }

    bool dfs(int depth, int start) {
        if (depth == k)
            return leaf_ok();
        for (int v = start; v <= pm.n - (k - depth); ++v) {
            // suffix unions shrink with v, so once completion is impossible
            // it stays impossible.
            if (!union_is_full(row(depth), suffix.data() + static_cast<size_t>(v) * pm.words, pm))
                return false;
            const uint64_t* m = pm.mask(v);
            if (minimal && !adds_bits(row(depth), m, pm.words))
                continue;
            uint64_t* next = row(depth + 1);
            for (int w = 0; w < pm.words; ++w)
                next[w] = row(depth)[w] | m[w];
            if (minimal && depth + 1 < k && is_full(next, pm))
                continue;
            chosen[depth] = v;
            if (dfs(depth + 1, v + 1))
                return true;
        }
        return false;
    }
};

// Lexicographically smallest k-subset whose masks cover all pairs
// (optionally also minimal), or nullopt. Sharded over the first element;
// shards are in lex order, so the first non-empty shard wins.
std::optional<std::vector<int>> find_subset(const PairMasks& pm, const std::vector<uint64_t>& suffix,
                                            int k, bool minimal, int threads) {
    if (k == 0) {
        if (pm.n * (pm.n - 1) / 2 == 0)
            return std::vector<int>{};
        return std::nullopt;
    }
    const int shards = pm.n - k + 1;
    if (shards <= 0)
        return std::nullopt;
    auto work = [&](int v0) -> std::optional<std::vector<int>> {
        SubsetSearch search(pm, suffix, k, minimal);
        const uint64_t* m = pm.mask(v0);
        uint64_t* next = search.row(1);
        std::copy(m, m + pm.words, next);
        search.chosen[0] = v0;
        if (minimal && k > 1 && is_full(next, pm))
            return std::nullopt;
        if (search.dfs(1, v0 + 1))
            return search.chosen;
        return std::nullopt;
    };
    return run_sharded_first<std::vector<int>>(shards, threads, work);
}

} // namespace

VertexPair::VertexPair(int a, int b) {
    if (a == b)
        throw std::invalid_argument("vertex pair requires two distinct vertices");
    x = std::min(a, b);
    y = std::max(a, b);
}

bool resolves(const DistanceMatrix& dm, int v, VertexPair p) {
    return dm.at(v, p.x) != dm.at(v, p.y);
}

std::vector<int> resolver_set(const DistanceMatrix& dm, VertexPair p) {
    require_connected(dm);
    std::vector<int> out;
    for (int v = 0; v < dm.n; ++v)
        if (resolves(dm, v, p))
            out.push_back(v);
    return out;
}

bool is_resolving_set(const DistanceMatrix& dm, std::span<const int> s) {
    require_connected(dm);
    for (int x = 0; x < dm.n; ++x) {
        for (int y = x + 1; y < dm.n; ++y) {
            bool hit = false;
            for (int v : s) {
                if (dm.at(v, x) != dm.at(v, y)) {
                    hit = true;
                    break;
                }
            }
            if (!hit)
                return false;
        }
    }
    return true;
}

std::vector<VertexPair> unresolved_pairs(const DistanceMatrix& dm, std::span<const int> s) {
    require_connected(dm);
    std::vector<VertexPair> out;
    for (int x = 0; x < dm.n; ++x) {
        for (int y = x + 1; y < dm.n; ++y) {
            bool hit = false;
            for (int v : s) {
                if (dm.at(v, x) != dm.at(v, y)) {
                    hit = true;
                    break;
                }
            }
            if (!hit)
                out.push_back(VertexPair(x, y));
        }
    }
    return out;
}

std::pair<int, std::vector<int>> metric_dimension(const Graph& g, const SearchCaps& caps,
                                                  int threads) {
    require_order(g.vertex_count(), caps.dim_max_n, "metric_dimension");
    DistanceMatrix dm = distance_matrix(g);
    require_connected(dm);
    PairMasks pm = build_pair_masks(dm);
    std::vector<uint64_t> suffix = suffix_union(pm);
    for (int k = 1; k < pm.n; ++k) {
        if (auto witness = find_subset(pm, suffix, k, /*minimal=*/false, threads))
            return {k, std::move(*witness)};
    }
    // Any (n-1)-subset resolves, so the loop always returns for n >= 2.
    throw std::logic_error("metric dimension search fell through");
}

std::pair<int, VertexPair> resolving_number_closed(const DistanceMatrix& dm) {
    require_connected(dm);
    if (dm.n < 2)
        throw std::invalid_argument("resolving_number_closed requires at least 2 vertices");
    int best = -1;
    VertexPair witness;
    for (int x = 0; x < dm.n; ++x) {
        for (int y = x + 1; y < dm.n; ++y) {
            int resolvers = 0;
            for (int v = 0; v < dm.n; ++v)
                if (dm.at(v, x) != dm.at(v, y))
                    ++resolvers;
            const int non = dm.n - resolvers;
            if (non > best) {
                best = non;
                witness = VertexPair(x, y);
            }
        }
    }
    return {1 + best, witness};
}

int resolving_number_bruteforce(const Graph& g, const SearchCaps& caps) {
    require_order(g.vertex_count(), caps.brute_res_max_n, "resolving_number_bruteforce");
    DistanceMatrix dm = distance_matrix(g);
    require_connected(dm);
    PairMasks pm = build_pair_masks(dm);
    const int n = pm.n;
    std::vector<uint64_t> acc(pm.words);
    std::vector<int> c;
    for (int k = 1; k <= n; ++k) {
        c.resize(k);
        for (int i = 0; i < k; ++i)
            c[i] = i;
        bool all_resolve = true;
        while (true) {
            std::fill(acc.begin(), acc.end(), 0);
            for (int i = 0; i < k; ++i) {
                const uint64_t* m = pm.mask(c[i]);
                for (int w = 0; w < pm.words; ++w)
                    acc[w] |= m[w];
            }
            if (!is_full(acc.data(), pm)) {
                all_resolve = false;
                break;
            }
            int i = k - 1;
            while (i >= 0 && c[i] == n - k + i)
                --i;
            if (i < 0)
                break;
            ++c[i];
            for (int j = i + 1; j < k; ++j)
                c[j] = c[j - 1] + 1;
        }
        if (all_resolve)
            return k;
    }
    throw std::logic_error("resolving number brute force fell through");
}

bool is_minimal_resolving_set(const DistanceMatrix& dm, std::span<const int> s) {
    if (!is_resolving_set(dm, s))
        return false;
    std::vector<int> reduced;
    reduced.reserve(s.size() - 1);
    for (size_t skip = 0; skip < s.size(); ++skip) {
        reduced.clear();
        for (size_t i = 0; i < s.size(); ++i)
            if (i != skip)
                reduced.push_back(s[i]);
        if (is_resolving_set(dm, reduced))
            return false;
    }
    return true;
}

std::pair<int, std::vector<int>> upper_dimension(const Graph& g, const SearchCaps& caps,
                                                 int threads) {
    require_order(g.vertex_count(), caps.dim_plus_max_n, "upper_dimension");
    DistanceMatrix dm = distance_matrix(g);
    require_connected(dm);
    const int res = resolving_number_closed(dm).first;
    PairMasks pm = build_pair_masks(dm);
    std::vector<uint64_t> suffix = suffix_union(pm);
    for (int s = res; s >= 1; --s) {
        if (auto witness = find_subset(pm, suffix, s, /*minimal=*/true, threads))
            return {s, std::move(*witness)};
    }
    throw std::logic_error("upper dimension search fell through");
}

std::optional<int> is_randomly_k_dimensional(const Graph& g, const SearchCaps& caps, int threads) {
    require_order(g.vertex_count(), caps.dim_max_n, "is_randomly_k_dimensional");
    DistanceMatrix dm = distance_matrix(g);
    require_connected(dm);
    const int res = resolving_number_closed(dm).first;
    // dim < res iff some (res-1)-subset resolves, so one existence search
    // settles the predicate.
    PairMasks pm = build_pair_masks(dm);
    std::vector<uint64_t> suffix = suffix_union(pm);
    if (find_subset(pm, suffix, res - 1, /*minimal=*/false, threads))
        return std::nullopt;
    return res;
}

std::pair<bool, long long> shell_identity_check(const Graph& g, int u) {
    DistanceMatrix dm = distance_matrix(g);
    if (!dm.connected())
        throw DisconnectedError("shell identity requires a connected graph");
    auto shells = neighborhood_shells(dm, u);
    long long sum = 0;
    for (size_t i = 1; i < shells.size(); ++i) {
        const long long size = static_cast<long long>(shells[i].size());
        sum += size * (size - 1) / 2;
    }
    return {sum == g.vertex_count() - 1, sum};
}

std::map<VertexPair, int> s_unique_pairs(const DistanceMatrix& dm, std::span<const int> s) {
    require_connected(dm);
    std::map<VertexPair, int> out;
    for (int x = 0; x < dm.n; ++x) {
        for (int y = x + 1; y < dm.n; ++y) {
            int count = 0;
            int associated = -1;
            for (int v : s) {
                if (dm.at(v, x) != dm.at(v, y)) {
                    ++count;
                    associated = v;
                    if (count > 1)
                        break;
                }
            }
            if (count == 0)
                throw NotResolvingError("set does not resolve pair {" + std::to_string(x) + ", " +
                                        std::to_string(y) + "}");
            if (count == 1)
                out.emplace(VertexPair(x, y), associated);
        }
    }
    return out;
}

ResolvingReport compute_report(const Graph& g, const ReportSelection& sel, const SearchCaps& caps,
                               int threads) {
    ResolvingReport report;
    report.n = g.vertex_count();
    DistanceMatrix dm = distance_matrix(g);
    require_connected(dm);
    if (sel.dim) {
        auto [dim, basis] = metric_dimension(g, caps, threads);
        report.dim = dim;
        report.metric_basis = std::move(basis);
    }
    if (sel.res) {
        auto [res, witness] = resolving_number_closed(dm);
        report.res = res;
        report.res_witness = witness;
    }
    if (sel.dim_plus) {
        auto [dim_plus, basis] = upper_dimension(g, caps, threads);
        report.dim_plus = dim_plus;
        report.upper_basis = std::move(basis);
    }
    if (report.dim && report.res && *report.dim == *report.res)
        report.randomly_k = *report.dim;
    return report;
}

} // namespace resolvedim
