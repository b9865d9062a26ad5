#include "resolvedim/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "resolvedim/errors.hpp"
#include "resolvedim/families.hpp"
#include "resolvedim/graph_io.hpp"
#include "resolvedim/threading.hpp"

namespace resolvedim {

namespace {

constexpr int kEnumerationCap = 8;

inline int pair_rank(int n, int x, int y) {
    return x * (n - 1) - x * (x - 1) / 2 + (y - x - 1);
}

bool mask_connected(int n, uint64_t mask) {
    uint32_t adj[8] = {};
    int bit = 0;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y, ++bit) {
            if (mask >> bit & 1) {
                adj[x] |= uint32_t{1} << y;
                adj[y] |= uint32_t{1} << x;
            }
        }
    }
    uint32_t reached = 1, frontier = 1;
    const uint32_t all = (uint32_t{1} << n) - 1;
    while (frontier) {
        uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier >> v & 1)
                next |= adj[v];
        frontier = next & ~reached;
        reached |= frontier;
    }
    return reached == all;
}

uint64_t relabel_mask(int n, uint64_t mask, const std::vector<int>& perm) {
    uint64_t out = 0;
    int bit = 0;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y, ++bit) {
            if (mask >> bit & 1) {
                const int a = std::min(perm[x], perm[y]);
                const int b = std::max(perm[x], perm[y]);
                out |= uint64_t{1} << pair_rank(n, a, b);
            }
        }
    }
    return out;
}

uint64_t canonical_mask(int n, uint64_t mask) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = mask;
    while (std::next_permutation(perm.begin(), perm.end()))
        best = std::min(best, relabel_mask(n, mask, perm));
    return best;
}

struct ScanStats {
    uint64_t examined = 0;
    uint64_t skipped = 0;
    std::vector<Violation> violations;
    std::map<std::string, long long> counters;

    void merge(ScanStats&& other) {
        examined += other.examined;
        skipped += other.skipped;
        violations.insert(violations.end(), std::make_move_iterator(other.violations.begin()),
                          std::make_move_iterator(other.violations.end()));
        for (auto& [key, value] : other.counters)
            counters[key] += value;
    }
};

using GraphCheck = std::function<void(const Graph&, ScanStats&)>;

// Shards the 2^C(n,2) mask space into contiguous chunks; chunk order in
// the merge keeps violation lists in ascending mask order at any thread
// count.
ScanStats scan_labeled(int n_min, int n_max, int threads, const GraphCheck& check) {
    ScanStats total;
    for (int n = n_min; n <= n_max; ++n) {
        const uint64_t masks = uint64_t{1} << (n * (n - 1) / 2);
        const int chunks = masks > 4096 ? std::max(threads * 16, 1) : 1;
        const uint64_t step = (masks + chunks - 1) / chunks;
        auto work = [&, n](int chunk) {
            ScanStats local;
            const uint64_t lo = step * static_cast<uint64_t>(chunk);
            const uint64_t hi = std::min(masks, lo + step);
            for (uint64_t mask = lo; mask < hi; ++mask) {
                if (!mask_connected(n, mask))
                    continue;
                check(graph_from_adjacency_mask(n, mask), local);
            }
            return local;
        };
        auto results = run_sharded<ScanStats>(chunks, threads, work);
        for (auto& r : results)
            total.merge(std::move(r));
    }
    return total;
}

ScanStats scan_corpus(std::istream& in, const GraphCheck& check) {
    ScanStats total;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        Graph g = [&] {
            try {
                return parse_graph6(line);
            } catch (const Error& e) {
                throw MalformedHeaderError("corpus line " + std::to_string(line_no) + ": " +
                                           e.what());
            }
        }();
        if (!is_connected(g)) {
            ++total.skipped;
            continue;
        }
        check(g, total);
    }
    return total;
}

VerificationReport run_suite(const std::string& suite, int n_max, const EnumOptions& opts,
                             const GraphCheck& check) {
    if (!opts.corpus && n_max > kEnumerationCap)
        throw TooLargeError("internal enumeration capped at n <= " +
                            std::to_string(kEnumerationCap));
    VerificationReport report;
    report.suite = suite;
    const auto start = std::chrono::steady_clock::now();
    ScanStats stats;
    if (opts.corpus) {
        report.range = "corpus:" + (opts.corpus_name.empty() ? "<stream>" : opts.corpus_name);
        stats = scan_corpus(*opts.corpus, check);
    } else {
        report.range = "n=2.." + std::to_string(n_max);
        stats = scan_labeled(2, n_max, resolve_thread_count(opts.threads), check);
    }
    report.examined = stats.examined;
    report.skipped = stats.skipped;
    report.violations = std::move(stats.violations);
    for (auto& [key, value] : stats.counters)
        report.info[key] = value;
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

bool is_complete_graph(const Graph& g) {
    const int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

bool is_cycle_graph(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3)
        return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2)
            return false;
    return is_connected(g);
}

uint64_t ipow_saturating(uint64_t base, uint64_t exp) {
    uint64_t result = 1;
    while (exp--) {
        if (base != 0 && result > UINT64_MAX / base)
            return UINT64_MAX;
        result *= base;
    }
    return result;
}

} // namespace

Graph graph_from_adjacency_mask(int n, uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y, ++bit)
            if (mask >> bit & 1)
                edges.emplace_back(x, y);
    return Graph::from_edge_list(n, edges);
}

void for_each_connected_graph(int n, bool dedup,
                              const std::function<void(const Graph&)>& visit) {
    if (n < 1)
        throw std::invalid_argument("enumeration needs n >= 1");
    if (n > kEnumerationCap)
        throw TooLargeError("labeled enumeration capped at n <= " +
                            std::to_string(kEnumerationCap));
    const uint64_t masks = uint64_t{1} << (n * (n - 1) / 2);
    for (uint64_t mask = 0; mask < masks; ++mask) {
        if (!mask_connected(n, mask))
            continue;
        if (dedup && canonical_mask(n, mask) != mask)
            continue;
        visit(graph_from_adjacency_mask(n, mask));
    }
}

VerificationReport verify_characterization(int n_max, const EnumOptions& opts) {
    GraphCheck check = [](const Graph& g, ScanStats& stats) {
        ++stats.examined;
        const int n = g.vertex_count();
        DistanceMatrix dm = distance_matrix(g);
        const int res = resolving_number_closed(dm).first;
        const int dim = metric_dimension(g).first;
        const bool randomly = dim == res;
        const bool expected = is_complete_graph(g) || (is_cycle_graph(g) && n % 2 == 1);
        if (randomly != expected) {
            stats.violations.push_back(
                {to_graph6(g), randomly
                                   ? "randomly " + std::to_string(dim) +
                                         "-dimensional but neither complete nor an odd cycle"
                                   : "complete graph or odd cycle with dim=" + std::to_string(dim) +
                                         " != res=" + std::to_string(res)});
            return;
        }
        if (!randomly)
            return;
        ++stats.counters["hits"];
        if (dim != 3)
            return;
        ++stats.counters["hits_k3"];
        for (int v = 0; v < n; ++v) {
            if (g.degree(v) != 3) {
                stats.violations.push_back({to_graph6(g), "randomly 3-dimensional but not 3-regular"});
                return;
            }
        }
        if (n != 4 && n != 7 && n != 10) {
            stats.violations.push_back(
                {to_graph6(g), "randomly 3-dimensional with n=" + std::to_string(n) +
                                   " outside {4, 7, 10}"});
            return;
        }
        for (int u = 0; u < n; ++u) {
            auto [holds, value] = shell_identity_check(g, u);
            if (!holds) {
                stats.violations.push_back(
                    {to_graph6(g), "shell identity fails at vertex " + std::to_string(u) +
                                       ": sum=" + std::to_string(value) +
                                       " != " + std::to_string(n - 1)});
                return;
            }
        }
        // Unique non-resolved partner pair for every pair.
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                int unresolved = 0;
                for (int x = 0; x < n; ++x)
                    for (int y = x + 1; y < n; ++y)
                        if (dm.at(u, x) == dm.at(u, y) && dm.at(v, x) == dm.at(v, y))
                            ++unresolved;
                if (unresolved != 1) {
                    stats.violations.push_back(
                        {to_graph6(g), "pair {" + std::to_string(u) + "," + std::to_string(v) +
                                           "} has " + std::to_string(unresolved) +
                                           " non-resolved pairs, expected exactly 1"});
                    return;
                }
            }
        }
    };
    return run_suite("characterization", n_max, opts, check);
}

VerificationReport verify_diameter_bound(int n_max, const EnumOptions& opts) {
    GraphCheck check = [](const Graph& g, ScanStats& stats) {
        ++stats.examined;
        DistanceMatrix dm = distance_matrix(g);
        const int res = resolving_number_closed(dm).first;
        if (res <= 2) {
            ++stats.skipped;
            ++stats.counters["skipped_low_res"];
            return;
        }
        if (is_cycle_graph(g) && g.vertex_count() % 2 == 0) {
            ++stats.skipped;
            ++stats.counters["skipped_even_cycle"];
            return;
        }
        const int d = diameter(dm);
        if (d > 3 * res - 5)
            stats.violations.push_back({to_graph6(g), "diameter " + std::to_string(d) + " > 3*" +
                                                          std::to_string(res) + "-5"});
    };
    return run_suite("diameter-bound", n_max, opts, check);
}

VerificationReport verify_order_bound(int n_max, const EnumOptions& opts) {
    GraphCheck check = [](const Graph& g, ScanStats& stats) {
        ++stats.examined;
        const uint64_t n = static_cast<uint64_t>(g.vertex_count());
        DistanceMatrix dm = distance_matrix(g);
        const uint64_t d = static_cast<uint64_t>(diameter(dm));
        const int dim = metric_dimension(g).first;
        const int res = resolving_number_closed(dm).first;
        if (n > ipow_saturating(d, dim) + dim)
            stats.violations.push_back({to_graph6(g), "n > d^dim + dim with d=" + std::to_string(d) +
                                                          ", dim=" + std::to_string(dim)});
        else if (n > ipow_saturating(d, res) + res)
            stats.violations.push_back({to_graph6(g), "n > d^res + res with d=" + std::to_string(d) +
                                                          ", res=" + std::to_string(res)});
    };
    VerificationReport report = run_suite("order-bound", n_max, opts, check);
    for (int a = 4; a <= 6; ++a)
        report.info["finiteness_bound_a" + std::to_string(a)] =
            static_cast<long long>(finiteness_bound(a));
    return report;
}

VerificationReport verify_family_formulas(const FamilyRanges& ranges, const SearchCaps& caps,
                                          int threads) {
    VerificationReport report;
    report.suite = "family-formulas";
    report.range = "l=" + std::to_string(ranges.l_min) + ".." + std::to_string(ranges.l_max) +
                   ",m=" + std::to_string(ranges.m_min) + ".." + std::to_string(ranges.m_max) +
                   ",p=" + std::to_string(ranges.p_min) + ".." + std::to_string(ranges.p_max);
    const auto start = std::chrono::steady_clock::now();
    threads = resolve_thread_count(threads);

    std::vector<std::pair<int, int>> reachable;

    auto check_spec = [&](const FamilySpec& spec) {
        PredictedParameters predicted;
        try {
            predicted = predicted_parameters(spec);
        } catch (const InvalidSpecError&) {
            // Out of formula domain (Hm/tilde at l = 2): counts as checked
            // rejection, not as a formula instance.
            ++report.skipped;
            ++report.info["out_of_domain"];
            return;
        }
        ++report.examined;
        auto [g, lab] = generate(spec);
        const std::string cert = to_graph6(g);
        const auto [dim, basis] = metric_dimension(g, caps, threads);
        const auto [dim_plus, upper] = upper_dimension(g, caps, threads);
        if (dim != predicted.dim || dim_plus != predicted.dim_plus) {
            report.violations.push_back(
                {cert, spec.describe() + ": solver found (dim=" + std::to_string(dim) +
                           ", dim+=" + std::to_string(dim_plus) + "), predicted (" +
                           std::to_string(predicted.dim) + ", " +
                           std::to_string(predicted.dim_plus) + ")"});
            return;
        }
        if (spec.kind != FamilyKind::PathExtended) {
            const std::vector<int> canonical = canonical_minimal_resolving_set(spec, lab);
            DistanceMatrix dm = distance_matrix(g);
            if (static_cast<int>(canonical.size()) != predicted.dim_plus ||
                !is_minimal_resolving_set(dm, canonical)) {
                report.violations.push_back(
                    {cert, spec.describe() + ": canonical set of size " +
                               std::to_string(canonical.size()) + " is not a minimal resolving set " +
                               "of the claimed size " + std::to_string(predicted.dim_plus)});
                return;
            }
            reachable.emplace_back(predicted.dim, predicted.dim_plus);
        }
    };

    for (int l = ranges.l_min; l <= ranges.l_max; ++l) {
        check_spec(FamilySpec::h(l));
        check_spec(FamilySpec::tilde_h(l));
        for (int m = ranges.m_min; m <= ranges.m_max; ++m) {
            check_spec(FamilySpec::hm(l, m));
            check_spec(FamilySpec::tilde_hm(l, m));
        }
    }
    for (int p = ranges.p_min; p <= ranges.p_max; ++p) {
        for (int l = ranges.l_min; l <= ranges.l_max; ++l) {
            check_spec(FamilySpec::path_extended(FamilySpec::h(l), p));
            check_spec(FamilySpec::path_extended(FamilySpec::tilde_h(l), p));
        }
        // Pendant bases have no preservation formula; exercised as
        // rejection checks.
        if (ranges.l_min <= 3 && 3 <= ranges.l_max)
            for (int m = ranges.m_min; m <= ranges.m_max; ++m)
                check_spec(FamilySpec::path_extended(FamilySpec::hm(3, m), p));
    }

    std::sort(reachable.begin(), reachable.end());
    reachable.erase(std::unique(reachable.begin(), reachable.end()), reachable.end());
    for (auto [a, b] : reachable) {
        const FamilySpec spec = inverse_realization(a, b);
        const PredictedParameters predicted = predicted_parameters(spec);
        if (predicted.dim != a || predicted.dim_plus != b) {
            auto [g, lab] = generate(spec);
            report.violations.push_back(
                {to_graph6(g), "inverse_realization(" + std::to_string(a) + ", " +
                                   std::to_string(b) + ") -> " + spec.describe() +
                                   " does not round-trip"});
        }
        ++report.info["realizations"];
    }

    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

uint64_t finiteness_bound(int a) {
    return ipow_saturating(static_cast<uint64_t>(3 * a - 5), static_cast<uint64_t>(a)) +
           static_cast<uint64_t>(a);
}

} // namespace resolvedim
