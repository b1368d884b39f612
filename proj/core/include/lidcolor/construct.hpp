#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lidcolor/coloring.hpp"
#include "lidcolor/graph.hpp"

/// Constructive lid colorers, one per graph class, together with the
/// certificate finders they rely on. Every colorer handles disconnected
/// input by coloring each component on its own.
namespace lidcolor::construct {

// ---- bipartite graphs, trees, products ------------------------------------

/// At most 4 colors. Components on at most 4 vertices are solved exactly;
/// larger ones are colored by distance mod 4 from a root with no pendant
/// neighbor (lowest id among non-leaves first, then any).
Coloring color_bipartite(const Graph& g);

/// Forests: 3 colors for components whose leaves are pairwise at even
/// distance, color_bipartite otherwise.
Coloring color_tree(const Graph& forest);

/// The 3-coloring of G1 □ G2 (vertex numbering as in cartesian_product).
/// Both factors must be bipartite without isolated vertices.
Coloring color_product(const Graph& g1, const Graph& g2);

// ---- k-trees ----------------------------------------------------------------

struct KTreeOrder {
    int k = 0;
    std::vector<Vertex> order;
};

/// Construction order of a k-tree, or nullopt if `g` is not one. Repeatedly
/// peels the highest-id simplicial vertex of degree k, so the returned order
/// starts with the lowest-id surviving clique in ascending id order.
std::optional<KTreeOrder> find_ktree_order(const Graph& g, int k);

/// Same, with k inferred from |E| = k|V| - k(k+1)/2.
std::optional<KTreeOrder> find_ktree_order(const Graph& g);

/// Throws InputError unless `ord` is a valid construction order for `g`.
void validate_ktree_order(const Graph& g, const KTreeOrder& ord);

/// At most 2k+2 colors. No vertex colored i gets a neighbor colored
/// i+k+1 mod 2k+2.
Coloring color_ktree(const Graph& g, const KTreeOrder& ord);

// ---- interval graphs --------------------------------------------------------

struct Interval {
    long long a = 0;
    long long b = 0;
    friend bool operator==(const Interval&, const Interval&) = default;
};
using IntervalSet = std::vector<Interval>;

/// Intersection graph; throws InputError when some a > b.
Graph interval_graph(const IntervalSet& intervals);

/// Largest number of pairwise intersecting intervals.
int interval_clique_number(const IntervalSet& intervals);

/// Interval model with integer endpoints, or nullopt if `g` is not an
/// interval graph. The clique ordering is found by backtracking with a
/// fixed step budget; exhausting it also yields nullopt.
std::optional<IntervalSet> interval_model(const Graph& g);

/// At most 2*omega colors via the left-to-right sweep. Colors j and j+k
/// (k = omega) never appear on adjacent intervals.
Coloring color_interval(const IntervalSet& intervals);

// ---- split graphs -----------------------------------------------------------

/// Elements (of the union of `sets`) whose traces keep every pair of
/// distinct sets apart. Size is at most (#distinct sets - 1) and the result
/// is inclusion-minimal; for small families it has minimum size.
std::vector<int> discriminating_subset(const std::vector<std::vector<int>>& sets);

struct SplitPartition {
    std::vector<Vertex> clique;       ///< sorted, maximum size
    std::vector<Vertex> independent;  ///< sorted
};

std::optional<SplitPartition> split_partition(const Graph& g);

/// At most 2*omega - 1 colors when omega >= 3 or the graph is a star,
/// at most 2*omega otherwise. Throws InputError on non-split input.
Coloring color_split(const Graph& g);

// ---- cographs ---------------------------------------------------------------

enum class CotreeKind { leaf, disjoint_union, join };

struct CotreeNode {
    CotreeKind kind = CotreeKind::leaf;
    Vertex vertex = -1;         ///< leaves only
    std::vector<int> children;  ///< node indices; >= 2 for internal nodes
};

struct Cotree {
    std::vector<CotreeNode> nodes;
    int root = -1;
    Vertex vertex_count = 0;

    [[nodiscard]] Graph to_graph() const;
    [[nodiscard]] int clique_number() const;
};

/// nullopt iff `g` has an induced P4.
std::optional<Cotree> build_cotree(const Graph& g);

/// At most 2*omega - 1 colors; with `strong` a strong lid coloring on at
/// most 2*omega colors, where every color 0..palette-1 is used.
Coloring color_cograph(const Cotree& tree, bool strong = false);

// ---- bounded degree ---------------------------------------------------------

/// Greedy proper coloring of the distance-3 power, vertices in id order.
Coloring color_bounded_degree(const Graph& g);

// ---- outerplanar and sparse planar graphs -----------------------------------

/// Cyclic outer-face order of a maximal outerplanar supergraph. cycle[0] is
/// the start vertex, whose neighbors all sit next to it on the cycle.
struct OuterOrder {
    std::vector<Vertex> cycle;
};

/// nullopt if `g` is not outerplanar.
std::optional<OuterOrder> outer_order(const Graph& g);

/// Throws InputError if `oo` is not a permutation of V, has crossing chords,
/// or starts at a vertex with a neighbor away from its two cycle neighbors.
void validate_outer_order(const Graph& g, const OuterOrder& oo);

/// At most 20 colors; vertices at BFS depth i from the start get colors in
/// {5(i mod 4), ..., 5(i mod 4) + 4}.
Coloring color_outerplanar(const Graph& g, const OuterOrder& oo);

/// Nice lid coloring (at most 5 colors, |c(N[v])| = 3 whenever d(v) >= 2)
/// of a planar graph with girth at least 36. Planarity is the caller's
/// responsibility; a girth below 36 raises InputError.
Coloring color_planar_girth36(const Graph& g);

/// One row of the extension table: colors of x2..x8 for key (a; b1, b2).
struct PlanarTableEntry {
    int a, b1, b2;
    std::array<int, 7> word;
};
std::span<const PlanarTableEntry> planar_extension_table();

// ---- block decomposition ----------------------------------------------------

using BlockColorer = std::function<Coloring(const Graph&)>;

/// Extends lid colorings of the blocks to the whole graph with at most
/// k + h colors, where k is the largest block palette and h the number of
/// colors of a greedy coloring of the graph induced by the cut vertices.
Coloring color_via_blocks(const Graph& g, const BlockColorer& block_colorer);

}  // namespace lidcolor::construct
