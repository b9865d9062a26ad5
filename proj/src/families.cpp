#include "resolvedim/families.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "resolvedim/errors.hpp"

namespace resolvedim {

namespace {

bool is_grid_based(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::Grid:
    case FamilyKind::H:
    case FamilyKind::Hm:
    case FamilyKind::TildeH:
    case FamilyKind::TildeHm:
        return true;
    default:
        return false;
    }
}

bool has_attachments(FamilyKind kind) {
    return kind == FamilyKind::H || kind == FamilyKind::Hm || kind == FamilyKind::TildeH ||
           kind == FamilyKind::TildeHm;
}

bool is_tilde(FamilyKind kind) {
    return kind == FamilyKind::TildeH || kind == FamilyKind::TildeHm;
}

bool is_triangle(FamilyKind kind) {
    return kind == FamilyKind::H || kind == FamilyKind::TildeH;
}

// Grid vertices are indexed row-major in x1: index = x1 * w2 + x2.
void append_grid(int w1, int w2, std::vector<std::pair<int, int>>& edges,
                 std::vector<VertexLabel>& labels) {
    for (int x1 = 0; x1 < w1; ++x1) {
        for (int x2 = 0; x2 < w2; ++x2) {
            labels.push_back({VertexLabel::Kind::GridCoord, x1, x2});
            const int v = x1 * w2 + x2;
            if (x1 + 1 < w1)
                edges.emplace_back(v, (x1 + 1) * w2 + x2);
            if (x2 + 1 < w2)
                edges.emplace_back(v, v + 1);
        }
    }
}

// Attachment vertices (triangle or pendants) adjacent to `anchor`.
void append_attachments(FamilyKind kind, int m, int anchor, std::vector<std::pair<int, int>>& edges,
                        std::vector<VertexLabel>& labels) {
    const int first = static_cast<int>(labels.size());
    if (is_triangle(kind)) {
        labels.push_back({VertexLabel::Kind::Alpha, 0, 0});
        labels.push_back({VertexLabel::Kind::Beta, 0, 0});
        edges.emplace_back(first, first + 1);
        edges.emplace_back(first, anchor);
        edges.emplace_back(first + 1, anchor);
    } else {
        for (int i = 1; i <= m; ++i) {
            labels.push_back({VertexLabel::Kind::Pendant, i, 0});
            edges.emplace_back(first + i - 1, anchor);
        }
    }
}

void require_formula_domain(const FamilySpec& spec) {
    spec.validate();
    switch (spec.kind) {
    case FamilyKind::H:
        return;
    case FamilyKind::Hm:
    case FamilyKind::TildeH:
    case FamilyKind::TildeHm:
        // At l = 2 the truncated grid degenerates and the upper-dimension
        // formulas give dim+ < dim; the realization only ever instantiates
        // these kinds with l >= 3.
        if (spec.l < 3)
            throw InvalidSpecError(spec.describe() + ": formulas require l >= 3");
        return;
    default:
        throw InvalidSpecError(spec.describe() + ": no formula for this kind");
    }
}

} // namespace

std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::Grid:
        return "grid";
    case FamilyKind::H:
        return "H";
    case FamilyKind::Hm:
        return "Hm";
    case FamilyKind::TildeH:
        return "tildeH";
    case FamilyKind::TildeHm:
        return "tildeHm";
    case FamilyKind::PathExtended:
        return "path-extended";
    case FamilyKind::Cycle:
        return "cycle";
    case FamilyKind::Path:
        return "path";
    case FamilyKind::Complete:
        return "complete";
    }
    return "?";
}

std::optional<FamilyKind> family_kind_from_name(const std::string& name) {
    std::string key;
    for (char c : name)
        if (c != '-' && c != '_')
            key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (key == "grid")
        return FamilyKind::Grid;
    if (key == "h")
        return FamilyKind::H;
    if (key == "hm")
        return FamilyKind::Hm;
    if (key == "tildeh")
        return FamilyKind::TildeH;
    if (key == "tildehm")
        return FamilyKind::TildeHm;
    if (key == "pathextended")
        return FamilyKind::PathExtended;
    if (key == "cycle")
        return FamilyKind::Cycle;
    if (key == "path")
        return FamilyKind::Path;
    if (key == "complete")
        return FamilyKind::Complete;
    return std::nullopt;
}

FamilySpec FamilySpec::grid(int l) { return {FamilyKind::Grid, l, 0, 0, nullptr}; }
FamilySpec FamilySpec::h(int l) { return {FamilyKind::H, l, 0, 0, nullptr}; }
FamilySpec FamilySpec::hm(int l, int m) { return {FamilyKind::Hm, l, m, 0, nullptr}; }
FamilySpec FamilySpec::tilde_h(int l) { return {FamilyKind::TildeH, l, 0, 0, nullptr}; }
FamilySpec FamilySpec::tilde_hm(int l, int m) { return {FamilyKind::TildeHm, l, m, 0, nullptr}; }

FamilySpec FamilySpec::path_extended(FamilySpec base, int p) {
    FamilySpec spec{FamilyKind::PathExtended, 0, 0, p, nullptr};
    spec.base = std::make_shared<const FamilySpec>(std::move(base));
    return spec;
}

FamilySpec FamilySpec::cycle(int n) { return {FamilyKind::Cycle, n, 0, 0, nullptr}; }
FamilySpec FamilySpec::path(int n) { return {FamilyKind::Path, n, 0, 0, nullptr}; }
FamilySpec FamilySpec::complete(int n) { return {FamilyKind::Complete, n, 0, 0, nullptr}; }

void FamilySpec::validate() const {
    switch (kind) {
    case FamilyKind::Grid:
    case FamilyKind::H:
    case FamilyKind::TildeH:
        if (l < 2)
            throw InvalidSpecError(describe() + ": grid side must be at least 2");
        return;
    case FamilyKind::Hm:
    case FamilyKind::TildeHm:
        if (l < 2)
            throw InvalidSpecError(describe() + ": grid side must be at least 2");
        if (m < 2)
            throw InvalidSpecError(describe() + ": pendant count must be at least 2");
        return;
    case FamilyKind::PathExtended:
        if (p < 1)
            throw InvalidSpecError(describe() + ": path extension length must be at least 1");
        if (!base)
            throw InvalidSpecError("path-extended spec has no base family");
        if (!has_attachments(base->kind))
            throw InvalidSpecError(describe() + ": base must be one of H, Hm, tildeH, tildeHm");
        base->validate();
        return;
    case FamilyKind::Cycle:
        if (l < 3)
            throw InvalidSpecError(describe() + ": cycles need at least 3 vertices");
        return;
    case FamilyKind::Path:
    case FamilyKind::Complete:
        if (l < 1)
            throw InvalidSpecError(describe() + ": vertex count must be at least 1");
        return;
    }
    throw InvalidSpecError("unknown family kind");
}

std::string FamilySpec::describe() const {
    switch (kind) {
    case FamilyKind::Grid:
        return "grid(l=" + std::to_string(l) + ")";
    case FamilyKind::H:
        return "H(l=" + std::to_string(l) + ")";
    case FamilyKind::Hm:
        return "Hm(l=" + std::to_string(l) + ",m=" + std::to_string(m) + ")";
    case FamilyKind::TildeH:
        return "tildeH(l=" + std::to_string(l) + ")";
    case FamilyKind::TildeHm:
        return "tildeHm(l=" + std::to_string(l) + ",m=" + std::to_string(m) + ")";
    case FamilyKind::PathExtended:
        return "path-extended(" + (base ? base->describe() : std::string("?")) +
               ",p=" + std::to_string(p) + ")";
    case FamilyKind::Cycle:
        return "cycle(" + std::to_string(l) + ")";
    case FamilyKind::Path:
        return "path(" + std::to_string(l) + ")";
    case FamilyKind::Complete:
        return "complete(" + std::to_string(l) + ")";
    }
    return "?";
}

std::string VertexLabel::to_string() const {
    switch (kind) {
    case Kind::GridCoord:
        return "g:" + std::to_string(a) + "," + std::to_string(b);
    case Kind::Alpha:
        return "alpha";
    case Kind::Beta:
        return "beta";
    case Kind::Pendant:
        return "a" + std::to_string(a);
    case Kind::PathVertex:
        return "pv" + std::to_string(a);
    case Kind::Plain:
        return "v" + std::to_string(a);
    }
    return "?";
}

GridLabeling::GridLabeling(std::vector<VertexLabel> labels) : labels_(std::move(labels)) {
    for (int v = 0; v < static_cast<int>(labels_.size()); ++v) {
        const VertexLabel& lbl = labels_[v];
        if (lbl.kind == VertexLabel::Kind::GridCoord) {
            grid_to_index_[{lbl.a, lbl.b}] = v;
            grid_vertices_.push_back(v);
            max_x1_ = std::max(max_x1_, lbl.a);
            max_x2_ = std::max(max_x2_, lbl.b);
        }
    }
}

std::pair<int, int> GridLabeling::coords(int v) const {
    const VertexLabel& lbl = labels_[v];
    if (lbl.kind != VertexLabel::Kind::GridCoord)
        throw NotGridVertexError("vertex " + std::to_string(v) + " (" + lbl.to_string() +
                                 ") is not a grid vertex");
    return {lbl.a, lbl.b};
}

std::optional<int> GridLabeling::grid_index(int x1, int x2) const {
    auto it = grid_to_index_.find({x1, x2});
    if (it == grid_to_index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<int> GridLabeling::index_of(const VertexLabel& lbl) const {
    for (int v = 0; v < size(); ++v) {
        const VertexLabel& have = labels_[v];
        if (have.kind == lbl.kind && have.a == lbl.a &&
            (have.kind != VertexLabel::Kind::GridCoord || have.b == lbl.b))
            return v;
    }
    return std::nullopt;
}

std::map<std::string, std::string> GridLabeling::to_label_map() const {
    std::map<std::string, std::string> out;
    for (int v = 0; v < size(); ++v)
        out[std::to_string(v)] = labels_[v].to_string();
    return out;
}

std::pair<Graph, GridLabeling> generate(const FamilySpec& spec) {
    spec.validate();
    std::vector<std::pair<int, int>> edges;
    std::vector<VertexLabel> labels;

    if (is_grid_based(spec.kind)) {
        const int w1 = is_tilde(spec.kind) ? spec.l - 1 : spec.l;
        append_grid(w1, spec.l, edges, labels);
        if (has_attachments(spec.kind))
            append_attachments(spec.kind, spec.m, /*anchor=*/0, edges, labels);
    } else if (spec.kind == FamilyKind::PathExtended) {
        const FamilySpec& b = *spec.base;
        const int w1 = is_tilde(b.kind) ? b.l - 1 : b.l;
        append_grid(w1, b.l, edges, labels);
        int prev = 0; // the origin keeps its grid adjacencies
        for (int j = 1; j <= spec.p; ++j) {
            labels.push_back({VertexLabel::Kind::PathVertex, j, 0});
            const int v = static_cast<int>(labels.size()) - 1;
            edges.emplace_back(prev, v);
            prev = v;
        }
        append_attachments(b.kind, b.m, /*anchor=*/prev, edges, labels);
    } else if (spec.kind == FamilyKind::Cycle) {
        for (int v = 0; v < spec.l; ++v) {
            labels.push_back({VertexLabel::Kind::Plain, v, 0});
            edges.emplace_back(v, (v + 1) % spec.l);
        }
    } else if (spec.kind == FamilyKind::Path) {
        for (int v = 0; v < spec.l; ++v) {
            labels.push_back({VertexLabel::Kind::Plain, v, 0});
            if (v + 1 < spec.l)
                edges.emplace_back(v, v + 1);
        }
    } else { // Complete
        for (int v = 0; v < spec.l; ++v) {
            labels.push_back({VertexLabel::Kind::Plain, v, 0});
            for (int u = 0; u < v; ++u)
                edges.emplace_back(u, v);
        }
    }

    Graph g = Graph::from_edge_list(static_cast<int>(labels.size()), edges);
    return {std::move(g), GridLabeling(std::move(labels))};
}

std::vector<int> quadrant(const GridLabeling& lab, int vertex, int i) {
    if (i < 1 || i > 4)
        throw std::invalid_argument("quadrant index must be in 1..4");
    auto [x1, x2] = lab.coords(vertex);
    std::vector<int> out;
    for (int v : lab.grid_vertices()) {
        auto [y1, y2] = lab.coords(v);
        const bool in = (i == 1) ? (y1 >= x1 && y2 >= x2)
                      : (i == 2) ? (y1 <= x1 && y2 >= x2)
                      : (i == 3) ? (y1 <= x1 && y2 <= x2)
                                 : (y1 >= x1 && y2 <= x2);
        if (in)
            out.push_back(v);
    }
    return out;
}

std::vector<int> diagonal(const GridLabeling& lab, int i) {
    std::vector<int> out;
    for (int v : lab.grid_vertices()) {
        auto [x1, x2] = lab.coords(v);
        if (x1 + x2 == i)
            out.push_back(v);
    }
    // Row-major indexing makes index order coincide with x1 order.
    return out;
}

std::vector<int> diagonal_pair_resolvers_closed(const GridLabeling& lab, VertexPair p) {
    auto [x1, x2] = lab.coords(p.x);
    auto [y1, y2] = lab.coords(p.y);
    if (x1 + x2 != y1 + y2)
        throw NotDiagonalPairError("pair {" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                                   "} is not a diagonal pair");
    // Row-major indexing orders the pair by x1, so p.x is the left element.
    std::vector<int> out;
    if (y1 - x1 == 1) {
        // Distance 2: Q2(x) u Q4(y).
        for (int v : lab.grid_vertices()) {
            auto [v1, v2] = lab.coords(v);
            if ((v1 <= x1 && v2 >= x2) || (v1 >= y1 && v2 <= y2))
                out.push_back(v);
        }
        return out;
    }
    // Distance > 2: complement of Q3(z) u Q1(z~) u the strict anti-diagonal
    // segment between x and y, with z = (x1, y2), z~ = (y1, x2).
    for (int v : lab.grid_vertices()) {
        auto [v1, v2] = lab.coords(v);
        if (v1 <= x1 && v2 <= y2)
            continue;
        if (v1 >= y1 && v2 >= x2)
            continue;
        if (v1 - x1 == v2 - y2 && v1 > x1 && v1 < y1)
            continue;
        out.push_back(v);
    }
    return out;
}

std::vector<int> canonical_minimal_resolving_set(const FamilySpec& spec, const GridLabeling& lab) {
    require_formula_domain(spec);
    const int l = spec.l;
    std::vector<int> out;
    auto push_coord = [&](int x1, int x2) {
        auto idx = lab.grid_index(x1, x2);
        if (!idx)
            throw InvalidSpecError("labeling does not match spec " + spec.describe());
        out.push_back(*idx);
    };
    for (int x1 = 1; x1 <= l - 2; ++x1) {
        push_coord(x1, x1);
        if (!(is_tilde(spec.kind) && x1 == l - 2))
            push_coord(x1, x1 + 1); // tilde variants drop (l-2, l-1)
    }
    push_coord(0, 1);
    if (is_triangle(spec.kind)) {
        out.push_back(*lab.index_of({VertexLabel::Kind::Alpha, 0, 0}));
    } else {
        for (int i = 1; i <= spec.m - 1; ++i)
            out.push_back(*lab.index_of({VertexLabel::Kind::Pendant, i, 0}));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> canonical_minimal_resolving_set(const FamilySpec& spec) {
    auto [g, lab] = generate(spec);
    return canonical_minimal_resolving_set(spec, lab);
}

PredictedParameters predicted_parameters(const FamilySpec& spec) {
    spec.validate();
    switch (spec.kind) {
    case FamilyKind::H:
        return {2, 2 * spec.l - 2, false};
    case FamilyKind::Hm:
        require_formula_domain(spec);
        return {spec.m + 1, spec.m + 2 * spec.l - 4, false};
    case FamilyKind::TildeH:
        require_formula_domain(spec);
        return {2, 2 * spec.l - 3, false};
    case FamilyKind::TildeHm:
        require_formula_domain(spec);
        return {spec.m + 1, spec.m + 2 * spec.l - 5, false};
    case FamilyKind::PathExtended:
        // Splicing a path at the origin preserves both parameters for the
        // triangle attachments. With pendants the exact solver refutes
        // preservation (dim drops to m once the pendants sit off the
        // grid), so only triangle bases get a prediction.
        if (spec.base->kind != FamilyKind::H && spec.base->kind != FamilyKind::TildeH)
            throw InvalidSpecError(spec.describe() +
                                   ": parameter preservation only holds for H/tildeH bases");
        return predicted_parameters(*spec.base);
    case FamilyKind::Cycle:
        return {2, 2, true};
    case FamilyKind::Path:
        if (spec.l < 2)
            throw InvalidSpecError("path(1) has no vertex pairs to resolve");
        // Two non-end vertices like {1, 3} form a minimal resolving pair
        // once the path is long enough for neither to resolve alone.
        return {1, spec.l <= 3 ? 1 : 2, true};
    case FamilyKind::Complete:
        if (spec.l < 2)
            throw InvalidSpecError("complete(1) has no vertex pairs to resolve");
        return {spec.l - 1, spec.l - 1, false};
    default:
        throw InvalidSpecError(spec.describe() + ": no closed-form prediction");
    }
}

FamilySpec inverse_realization(int a, int b) {
    if (a < 2 || b < a)
        throw OutOfFormulaRangeError("realization needs 2 <= a <= b, got a=" + std::to_string(a) +
                                     ", b=" + std::to_string(b));
    FamilySpec spec;
    if (a == 2 && b % 2 == 0)
        spec = FamilySpec::h((b + 2) / 2);
    else if (a == 2)
        spec = FamilySpec::tilde_h(2 + (b - 1) / 2);
    else if ((b - a) % 2 == 1)
        spec = FamilySpec::hm(2 + (b - a + 1) / 2, a - 1);
    else
        spec = FamilySpec::tilde_hm(3 + (b - a) / 2, a - 1);
    const PredictedParameters check = predicted_parameters(spec);
    if (check.dim != a || check.dim_plus != b)
        throw OutOfFormulaRangeError("no formula covers (a=" + std::to_string(a) +
                                     ", b=" + std::to_string(b) + ")");
    return spec;
}

} // namespace resolvedim
