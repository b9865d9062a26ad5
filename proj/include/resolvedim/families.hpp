#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resolvedim/graph.hpp"
#include "resolvedim/resolving.hpp"

namespace resolvedim {

enum class FamilyKind {
    Grid,
    H,            // l x l grid + triangle {alpha, beta} at (0,0)
    Hm,           // l x l grid + m pendant vertices at (0,0)
    TildeH,       // H with the column x1 = l-1 deleted
    TildeHm,      // Hm with the column x1 = l-1 deleted
    PathExtended, // base family with a path of p vertices spliced at (0,0)
    Cycle,
    Path,
    Complete,
};

std::string family_kind_name(FamilyKind kind);
std::optional<FamilyKind> family_kind_from_name(const std::string& name);

/// Family parameters. `l` is the grid side for the grid-based kinds and
/// the vertex count for Cycle/Path/Complete; `m` the pendant count; `p`
/// the path-extension length over `base`.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Grid;
    int l = 0;
    int m = 0;
    int p = 0;
    std::shared_ptr<const FamilySpec> base;

    static FamilySpec grid(int l);
    static FamilySpec h(int l);
    static FamilySpec hm(int l, int m);
    static FamilySpec tilde_h(int l);
    static FamilySpec tilde_hm(int l, int m);
    static FamilySpec path_extended(FamilySpec base, int p);
    static FamilySpec cycle(int n);
    static FamilySpec path(int n);
    static FamilySpec complete(int n);

    /// Throws InvalidSpecError when the graph is not generatable.
    void validate() const;

    std::string describe() const;
};

struct VertexLabel {
    enum class Kind { GridCoord, Alpha, Beta, Pendant, PathVertex, Plain };
    Kind kind = Kind::Plain;
    int a = 0; // x1 / pendant number (1-based) / path position (1-based) / index
    int b = 0; // x2

    std::string to_string() const;
};

/// Bijection between vertex indices and family labels. Grid coordinates
/// keep their original values even after tilde reindexing.
class GridLabeling {
public:
    GridLabeling() = default;
    explicit GridLabeling(std::vector<VertexLabel> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const VertexLabel& label(int v) const { return labels_[v]; }

    bool is_grid(int v) const { return labels_[v].kind == VertexLabel::Kind::GridCoord; }
    std::pair<int, int> coords(int v) const; // throws NotGridVertexError

    std::optional<int> grid_index(int x1, int x2) const;
    const std::vector<int>& grid_vertices() const { return grid_vertices_; }
    int max_x1() const { return max_x1_; }
    int max_x2() const { return max_x2_; }

    std::optional<int> index_of(const VertexLabel& lbl) const;

    /// Sidecar map, e.g. {"0": "g:0,0", "9": "alpha"}.
    std::map<std::string, std::string> to_label_map() const;

private:
    std::vector<VertexLabel> labels_;
    std::map<std::pair<int, int>, int> grid_to_index_;
    std::vector<int> grid_vertices_;
    int max_x1_ = -1;
    int max_x2_ = -1;
};

std::pair<Graph, GridLabeling> generate(const FamilySpec& spec);

/// Quadrant Q_i(x), i in 1..4, over grid-labeled vertices only.
/// Q1: y1>=x1, y2>=x2; Q2: y1<=x1, y2>=x2; Q3: y1<=x1, y2<=x2;
/// Q4: y1>=x1, y2<=x2.
std::vector<int> quadrant(const GridLabeling& lab, int vertex, int i);

/// Diagonal D_i = grid vertices with x1+x2 = i, ordered by x1 ascending.
std::vector<int> diagonal(const GridLabeling& lab, int i);

/// Closed-form R(x,y) for a diagonal pair, restricted to grid vertices
/// (attachment vertices never resolve diagonal pairs). Distance-2 pairs
/// use Q2(x) u Q4(y); farther pairs use the complement expression from
/// the union decomposition.
std::vector<int> diagonal_pair_resolvers_closed(const GridLabeling& lab, VertexPair p);

/// The explicit minimal resolving set behind the upper-dimension
/// formulas: the double staircase {(x1,x1), (x1,x1+1)} for 1<=x1<=l-2,
/// plus (0,1) and the attachments (alpha, or all pendants but one); tilde
/// variants drop (l-2, l-1).
std::vector<int> canonical_minimal_resolving_set(const FamilySpec& spec, const GridLabeling& lab);
std::vector<int> canonical_minimal_resolving_set(const FamilySpec& spec);

struct PredictedParameters {
    int dim = 0;
    int dim_plus = 0;
    /// Cycle/Path predictions are solver-backed facts, not formulas from
    /// the upper-dimension analysis.
    bool oracle_backed = false;
};

/// Closed-form (dim, dim+) predictions. Hm/TildeH/TildeHm formulas
/// require l >= 3 (at l = 2 the constructions degenerate and the formulas
/// fail); out-of-domain specs raise InvalidSpecError.
PredictedParameters predicted_parameters(const FamilySpec& spec);

/// A family spec realizing dim = a, dim+ = b for 2 <= a <= b.
FamilySpec inverse_realization(int a, int b);

} // namespace resolvedim
