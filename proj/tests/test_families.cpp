#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "resolvedim/distance.hpp"
#include "resolvedim/errors.hpp"
#include "resolvedim/families.hpp"
#include "resolvedim/resolving.hpp"
#include "test_util.hpp"

using namespace resolvedim;

namespace {

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

// Distance-2 diagonal pairs of a labeling: {(a, c), (a+1, c-1)}.
std::vector<std::pair<int, int>> distance2_diagonal_pairs(const GridLabeling& lab) {
    std::vector<std::pair<int, int>> out;
    for (int v : lab.grid_vertices()) {
        auto [a, c] = lab.coords(v);
        auto other = lab.grid_index(a + 1, c - 1);
        if (other)
            out.emplace_back(v, *other);
    }
    return out;
}

} // namespace

TEST_CASE("generate grid matches the hand-built grid") {
    auto [g, lab] = generate(FamilySpec::grid(3));
    CHECK(g.vertex_count() == 9);
    CHECK(g.edge_count() == 12);
    CHECK(g == testutil::make_grid(3));
    DistanceMatrix dm = distance_matrix(g);
    CHECK(dm.at(*lab.grid_index(0, 0), *lab.grid_index(2, 2)) == 4);
}

TEST_CASE("generate H(l)") {
    auto [g, lab] = generate(FamilySpec::h(3));
    CHECK(g.vertex_count() == 11);
    const int alpha = *lab.index_of({VertexLabel::Kind::Alpha, 0, 0});
    const int beta = *lab.index_of({VertexLabel::Kind::Beta, 0, 0});
    CHECK(alpha == 9);
    CHECK(beta == 10);
    CHECK(g.has_edge(alpha, beta));
    CHECK(g.has_edge(alpha, 0));
    CHECK(g.has_edge(beta, 0));

    // Attachment distance law: d(alpha, x) = d(beta, x) = x1 + x2 + 1.
    DistanceMatrix dm = distance_matrix(g);
    for (int v : lab.grid_vertices()) {
        auto [x1, x2] = lab.coords(v);
        CHECK(dm.at(alpha, v) == x1 + x2 + 1);
        CHECK(dm.at(beta, v) == x1 + x2 + 1);
    }
    CHECK(diameter(dm) == 5); // corner (2,2) to the triangle

    CHECK(girth(generate(FamilySpec::h(2)).first) == 3);
}

TEST_CASE("generate Hm(l,m)") {
    auto [g, lab] = generate(FamilySpec::hm(3, 2));
    CHECK(g.vertex_count() == 11);
    int pendants = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 1) {
            ++pendants;
            CHECK(g.neighbors(v)[0] == *lab.grid_index(0, 0));
        }
    }
    CHECK(pendants == 2);
    CHECK(lab.label(9).to_string() == "a1");
    CHECK(lab.label(10).to_string() == "a2");
}

TEST_CASE("generate tilde variants") {
    auto [g, lab] = generate(FamilySpec::tilde_h(3));
    CHECK(g.vertex_count() == 8); // 2x3 grid block + triangle
    CHECK(lab.max_x1() == 1);
    CHECK(lab.max_x2() == 2);
    CHECK_FALSE(lab.grid_index(2, 0).has_value());

    auto [gm, labm] = generate(FamilySpec::tilde_hm(3, 2));
    CHECK(gm.vertex_count() == 8);
    CHECK(labm.label(6).to_string() == "a1");
}

TEST_CASE("generate path-extended") {
    auto [g, lab] = generate(FamilySpec::path_extended(FamilySpec::h(3), 2));
    CHECK(g.vertex_count() == 13); // 9 grid + 2 path + triangle
    const int pv1 = *lab.index_of({VertexLabel::Kind::PathVertex, 1, 0});
    const int pv2 = *lab.index_of({VertexLabel::Kind::PathVertex, 2, 0});
    const int alpha = *lab.index_of({VertexLabel::Kind::Alpha, 0, 0});
    const int beta = *lab.index_of({VertexLabel::Kind::Beta, 0, 0});
    CHECK(lab.label(pv1).to_string() == "pv1");
    CHECK(g.has_edge(*lab.grid_index(0, 0), pv1));
    CHECK(g.has_edge(pv1, pv2));
    CHECK(g.has_edge(pv2, alpha));
    CHECK(g.has_edge(pv2, beta));
    CHECK(g.has_edge(alpha, beta));

    // Attachment distances grow uniformly by p over the grid.
    DistanceMatrix dm = distance_matrix(g);
    for (int v : lab.grid_vertices()) {
        auto [x1, x2] = lab.coords(v);
        CHECK(dm.at(alpha, v) == x1 + x2 + 1 + 2);
    }
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(generate(FamilySpec::grid(1)), InvalidSpecError);
    CHECK_THROWS_AS(generate(FamilySpec::hm(3, 1)), InvalidSpecError);
    CHECK_THROWS_AS(generate(FamilySpec::cycle(2)), InvalidSpecError);
    CHECK_THROWS_AS(generate(FamilySpec::path_extended(FamilySpec::h(3), 0)), InvalidSpecError);
    CHECK_THROWS_AS(generate(FamilySpec::path_extended(FamilySpec::grid(3), 1)), InvalidSpecError);

    // The graphs exist at l = 2; only the formulas are out of domain.
    CHECK(generate(FamilySpec::tilde_h(2)).first.vertex_count() == 4);
    CHECK(generate(FamilySpec::hm(2, 2)).first.vertex_count() == 6);
}

TEST_CASE("quadrants") {
    auto [g, lab] = generate(FamilySpec::grid(3));
    CHECK(quadrant(lab, *lab.grid_index(0, 0), 1) == lab.grid_vertices());
    CHECK(quadrant(lab, *lab.grid_index(0, 1), 2) == std::vector<int>{1, 2});
    for (int v : lab.grid_vertices())
        for (int i = 1; i <= 4; ++i) {
            auto q = quadrant(lab, v, i);
            CHECK(std::binary_search(q.begin(), q.end(), v));
        }
    CHECK_THROWS_AS(quadrant(lab, 0, 5), std::invalid_argument);

    auto [h, hlab] = generate(FamilySpec::h(3));
    CHECK_THROWS_AS(quadrant(hlab, 9, 1), NotGridVertexError); // alpha

    // Attachments never appear in quadrants.
    for (int i = 1; i <= 4; ++i)
        for (int v : quadrant(hlab, *hlab.grid_index(1, 1), i))
            CHECK(hlab.is_grid(v));
}

TEST_CASE("diagonals") {
    auto [g, lab] = generate(FamilySpec::grid(3));
    CHECK(diagonal(lab, 0) == std::vector<int>{*lab.grid_index(0, 0)});
    CHECK(diagonal(lab, 2) == std::vector<int>{2, 4, 6}); // (0,2), (1,1), (2,0) by x1
    CHECK(diagonal(lab, 5).empty());

    DistanceMatrix dm = distance_matrix(g);
    const int origin = *lab.grid_index(0, 0);
    size_t covered = 0;
    for (int i = 0; i <= 4; ++i) {
        auto d = diagonal(lab, i);
        covered += d.size();
        for (int v : d)
            CHECK(dm.at(origin, v) == i); // members are equidistant from (0,0)
    }
    CHECK(covered == lab.grid_vertices().size());
}

TEST_CASE("closed-form resolvers for the worked pairs") {
    auto [g, lab] = generate(FamilySpec::grid(3));
    // {(0,1), (1,0)}: Q2((0,1)) u Q4((1,0)).
    CHECK(diagonal_pair_resolvers_closed(lab, VertexPair(1, 3)) == std::vector<int>{1, 2, 3, 6});
    // {(0,2), (2,0)} decomposes into the two distance-2 pair sets.
    auto far = diagonal_pair_resolvers_closed(lab, VertexPair(2, 6));
    auto near1 = diagonal_pair_resolvers_closed(lab, VertexPair(1, 3));
    auto near2 = diagonal_pair_resolvers_closed(lab, VertexPair(5, 7));
    std::set<int> expected = as_set(near1);
    expected.insert(near2.begin(), near2.end());
    CHECK(as_set(far) == expected);

    CHECK_THROWS_AS(diagonal_pair_resolvers_closed(lab, VertexPair(0, 1)), NotDiagonalPairError);
    CHECK_THROWS_AS(diagonal_pair_resolvers_closed(generate(FamilySpec::h(3)).second,
                                                   VertexPair(9, 10)),
                    NotGridVertexError);
}

TEST_CASE("closed-form resolvers equal brute force on every diagonal pair") {
    std::vector<FamilySpec> specs = {FamilySpec::grid(2), FamilySpec::grid(3), FamilySpec::grid(4),
                                     FamilySpec::tilde_h(3), FamilySpec::tilde_h(4),
                                     FamilySpec::h(3), FamilySpec::hm(3, 2),
                                     FamilySpec::path_extended(FamilySpec::h(3), 2)};
    for (const auto& spec : specs) {
        CAPTURE(spec.describe());
        auto [g, lab] = generate(spec);
        DistanceMatrix dm = distance_matrix(g);
        for (size_t i = 0; i < lab.grid_vertices().size(); ++i) {
            for (size_t j = i + 1; j < lab.grid_vertices().size(); ++j) {
                const int x = lab.grid_vertices()[i];
                const int y = lab.grid_vertices()[j];
                auto [x1, x2] = lab.coords(x);
                auto [y1, y2] = lab.coords(y);
                if (x1 + x2 != y1 + y2)
                    continue;
                CHECK(diagonal_pair_resolvers_closed(lab, VertexPair(x, y)) ==
                      resolver_set(dm, VertexPair(x, y)));
            }
        }
    }
}

TEST_CASE("far diagonal pairs decompose into exactly y1-x1 distance-2 sets") {
    for (int l : {4, 5}) {
        auto [g, lab] = generate(FamilySpec::grid(l));
        for (int v : lab.grid_vertices()) {
            auto [x1, x2] = lab.coords(v);
            for (int t = 2; t <= std::min(x2, l - 1 - x1); ++t) {
                auto other = lab.grid_index(x1 + t, x2 - t);
                REQUIRE(other.has_value());
                std::set<int> pieces;
                for (int j = 0; j < t; ++j) {
                    auto r = lab.grid_index(x1 + j, x2 - t + j + 1);
                    auto s = lab.grid_index(x1 + j + 1, x2 - t + j);
                    REQUIRE(r.has_value());
                    REQUIRE(s.has_value());
                    auto part = diagonal_pair_resolvers_closed(lab, VertexPair(*r, *s));
                    pieces.insert(part.begin(), part.end());
                }
                CHECK(as_set(diagonal_pair_resolvers_closed(lab, VertexPair(v, *other))) == pieces);
            }
        }
    }
}

TEST_CASE("same-row and same-column containment") {
    // For three distance-2 pairs in one row with x1 < r1 < t1:
    // R(r,s) is inside R(x,y) u R(t,z). Columns behave the same.
    for (int l : {4, 5}) {
        auto [g, lab] = generate(FamilySpec::grid(l));
        auto pairs = distance2_diagonal_pairs(lab);
        for (auto [x, y] : pairs) {
            for (auto [r, s] : pairs) {
                for (auto [t, z] : pairs) {
                    auto [x1, x2] = lab.coords(x);
                    auto [r1, r2] = lab.coords(r);
                    auto [t1, t2] = lab.coords(t);
                    const bool same_row = x2 == r2 && r2 == t2;
                    const bool same_col = x1 == r1 && r1 == t1;
                    if (!same_row && !same_col)
                        continue;
                    const bool ordered = same_row ? (x1 < r1 && r1 < t1)
                                                  : (x2 > r2 && r2 > t2);
                    if (!ordered)
                        continue;
                    auto middle = diagonal_pair_resolvers_closed(lab, VertexPair(r, s));
                    auto left = diagonal_pair_resolvers_closed(lab, VertexPair(x, y));
                    auto right = diagonal_pair_resolvers_closed(lab, VertexPair(t, z));
                    std::set<int> hull = as_set(left);
                    hull.insert(right.begin(), right.end());
                    for (int v : middle)
                        CHECK(hull.count(v) == 1);
                }
            }
        }
    }
}

TEST_CASE("canonical minimal resolving set") {
    // H(3): staircase {(1,1), (1,2)} plus (0,1) and alpha.
    CHECK(canonical_minimal_resolving_set(FamilySpec::h(3)) == std::vector<int>{1, 4, 5, 9});

    struct Case {
        FamilySpec spec;
        int size;
    };
    std::vector<Case> cases;
    for (int l = 2; l <= 5; ++l)
        cases.push_back({FamilySpec::h(l), 2 * l - 2});
    for (int l = 3; l <= 5; ++l) {
        cases.push_back({FamilySpec::tilde_h(l), 2 * l - 3});
        for (int m = 2; m <= 3; ++m) {
            cases.push_back({FamilySpec::hm(l, m), m + 2 * l - 4});
            cases.push_back({FamilySpec::tilde_hm(l, m), m + 2 * l - 5});
        }
    }
    for (const auto& c : cases) {
        CAPTURE(c.spec.describe());
        auto [g, lab] = generate(c.spec);
        auto set = canonical_minimal_resolving_set(c.spec, lab);
        CHECK(static_cast<int>(set.size()) == c.size);
        CHECK(is_minimal_resolving_set(distance_matrix(g), set));
    }

    CHECK_THROWS_AS(canonical_minimal_resolving_set(FamilySpec::hm(2, 2)), InvalidSpecError);
    CHECK_THROWS_AS(canonical_minimal_resolving_set(FamilySpec::tilde_h(2)), InvalidSpecError);
    CHECK_THROWS_AS(canonical_minimal_resolving_set(FamilySpec::grid(3)), InvalidSpecError);
}

TEST_CASE("predicted parameters") {
    auto check = [](const FamilySpec& spec, int dim, int dim_plus, bool oracle) {
        CAPTURE(spec.describe());
        const PredictedParameters p = predicted_parameters(spec);
        CHECK(p.dim == dim);
        CHECK(p.dim_plus == dim_plus);
        CHECK(p.oracle_backed == oracle);
    };
    check(FamilySpec::h(4), 2, 6, false);
    check(FamilySpec::h(2), 2, 2, false);
    check(FamilySpec::tilde_hm(4, 3), 4, 6, false);
    check(FamilySpec::cycle(7), 2, 2, true);
    check(FamilySpec::path(3), 1, 1, true);
    check(FamilySpec::path(5), 1, 2, true);
    check(FamilySpec::complete(5), 4, 4, false);
    check(FamilySpec::path_extended(FamilySpec::h(3), 2), 2, 4, false);
    check(FamilySpec::path_extended(FamilySpec::tilde_h(3), 2), 2, 3, false);

    // Pendant-based extensions do not preserve dim (the solver finds
    // dim = m), so they carry no prediction.
    CHECK_THROWS_AS(predicted_parameters(FamilySpec::path_extended(FamilySpec::hm(3, 2), 1)),
                    InvalidSpecError);
    CHECK_THROWS_AS(predicted_parameters(FamilySpec::hm(2, 2)), InvalidSpecError);
    CHECK_THROWS_AS(predicted_parameters(FamilySpec::tilde_h(2)), InvalidSpecError);
    CHECK_THROWS_AS(predicted_parameters(FamilySpec::tilde_hm(2, 3)), InvalidSpecError);
    CHECK_THROWS_AS(predicted_parameters(FamilySpec::grid(3)), InvalidSpecError);
    CHECK_THROWS_AS(predicted_parameters(FamilySpec::path(1)), InvalidSpecError);
}

TEST_CASE("cycle and path predictions match the exact solver") {
    for (int n = 3; n <= 9; ++n) {
        CAPTURE(n);
        const PredictedParameters p = predicted_parameters(FamilySpec::cycle(n));
        CHECK(metric_dimension(testutil::make_cycle(n)).first == p.dim);
        CHECK(upper_dimension(testutil::make_cycle(n)).first == p.dim_plus);
    }
    for (int n = 2; n <= 9; ++n) {
        CAPTURE(n);
        const PredictedParameters p = predicted_parameters(FamilySpec::path(n));
        CHECK(metric_dimension(testutil::make_path(n)).first == p.dim);
        CHECK(upper_dimension(testutil::make_path(n)).first == p.dim_plus);
    }
}

TEST_CASE("inverse realization") {
    CHECK(inverse_realization(2, 6).describe() == "H(l=4)");
    CHECK(inverse_realization(2, 5).describe() == "tildeH(l=4)");
    CHECK(inverse_realization(3, 6).describe() == "Hm(l=4,m=2)");
    CHECK(inverse_realization(2, 2).describe() == "H(l=2)");
    CHECK(inverse_realization(3, 3).describe() == "tildeHm(l=3,m=2)");

    for (int a = 2; a <= 8; ++a) {
        for (int b = a; b <= 8; ++b) {
            const FamilySpec spec = inverse_realization(a, b);
            const PredictedParameters p = predicted_parameters(spec);
            CHECK(p.dim == a);
            CHECK(p.dim_plus == b);
        }
    }

    CHECK_THROWS_AS(inverse_realization(1, 5), OutOfFormulaRangeError);
    CHECK_THROWS_AS(inverse_realization(3, 2), OutOfFormulaRangeError);
}

TEST_CASE("boundary realizations verified by the exact solvers") {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {3, 4}}) {
        CAPTURE(a);
        CAPTURE(b);
        const FamilySpec spec = inverse_realization(a, b);
        auto [g, lab] = generate(spec);
        CHECK(metric_dimension(g).first == a);
        CHECK(upper_dimension(g).first == b);
    }
}

TEST_CASE("family formulas hold on small instances") {
    std::vector<FamilySpec> specs = {FamilySpec::h(2),          FamilySpec::h(3),
                                     FamilySpec::tilde_h(3),    FamilySpec::hm(3, 2),
                                     FamilySpec::tilde_hm(3, 2),
                                     FamilySpec::path_extended(FamilySpec::h(3), 1),
                                     FamilySpec::path_extended(FamilySpec::tilde_h(3), 2)};
    for (const auto& spec : specs) {
        CAPTURE(spec.describe());
        const PredictedParameters p = predicted_parameters(spec);
        auto [g, lab] = generate(spec);
        CHECK(metric_dimension(g).first == p.dim);
        CHECK(upper_dimension(g).first == p.dim_plus);
    }
}

TEST_CASE("out-of-domain boundary values pinned by the solver") {
    // The l = 2 exclusions are real: the formulas would claim dim+ < dim.
    auto [hm22, lab1] = generate(FamilySpec::hm(2, 2));
    CHECK(metric_dimension(hm22).first == 3);    // formula would say m+1 = 3
    CHECK(upper_dimension(hm22).first == 3);     // formula would say m+2l-4 = 2

    auto [paw, lab2] = generate(FamilySpec::tilde_h(2));
    CHECK(metric_dimension(paw).first == 2);
    CHECK(upper_dimension(paw).first == 2);      // formula would say 2l-3 = 1
}

TEST_CASE("labels") {
    auto [g, lab] = generate(FamilySpec::hm(3, 2));
    auto map = lab.to_label_map();
    CHECK(map.at("0") == "g:0,0");
    CHECK(map.at("8") == "g:2,2");
    CHECK(map.at("9") == "a1");
    CHECK(map.at("10") == "a2");

    auto [c, clab] = generate(FamilySpec::cycle(4));
    CHECK(clab.to_label_map().at("2") == "v2");
}
