#pragma once

#include <optional>

#include "lidcolor/coloring.hpp"
#include "lidcolor/graph.hpp"

namespace lidcolor::exact {

/// Some lid coloring with at most k colors, or nullopt if none exists.
///
/// Components are solved independently. Within a component the search visits
/// vertices in smallest-last (degeneracy) order, tries colors in ascending
/// order and prunes on properness immediately and on the identifying
/// condition as soon as both closed neighborhoods of an edge are colored.
/// Palettes above 64 colors are only supported when k >= |V|.
std::optional<Coloring> k_lid_colorable(const Graph& g, int k);

struct ChromaticResult {
    std::optional<int> value;  ///< nullopt: exceeds k_max
    Coloring witness;          ///< empty when value is nullopt
};

/// Smallest k <= k_max admitting a lid coloring (max over components).
ChromaticResult lid_chromatic(const Graph& g, int k_max);

/// Structural 3-lid decision for a connected graph (triangle, or bipartite
/// with a 2-colorable neighborhood hypergraph on one side).
std::optional<Coloring> three_lid_decide(const Graph& g);

/// Tree with at least 3 vertices: the explicit 3-lid coloring when all leaves
/// are pairwise at even distance, nullopt otherwise.
std::optional<Coloring> tree_three_lid(const Graph& tree);

/// Vertex order used for branching: repeated removal of a minimum-degree
/// vertex (ties by id), reversed.
std::vector<Vertex> degeneracy_order(const Graph& g);

}  // namespace lidcolor::exact
