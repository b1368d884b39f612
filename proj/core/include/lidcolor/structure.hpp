#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lidcolor/coloring.hpp"
#include "lidcolor/graph.hpp"
#include "lidcolor/hypergraph.hpp"

namespace lidcolor {

/// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

struct Bipartition {
    std::vector<Vertex> u;  ///< sorted; holds the lowest vertex of every component
    std::vector<Vertex> v;  ///< sorted
};

std::optional<Bipartition> bipartition(const Graph& g);

/// G1 □ G2 with vertex (a, b) numbered a * |G2| + b.
Graph cartesian_product(const Graph& g1, const Graph& g2);

struct BlockDecomposition {
    /// Maximal 2-connected components (bridges as 2-vertex blocks, isolated
    /// vertices as 1-vertex blocks). Each block sorted; blocks ordered by
    /// their smallest vertex, then lexicographically.
    std::vector<std::vector<Vertex>> blocks;
    std::vector<Vertex> cut_vertices;  ///< sorted
};

BlockDecomposition blocks(const Graph& g);

/// Hypergraph on the vertex ids of `g` whose hyperedges are N(v) for v in `side_v`
/// (one per vertex, duplicates kept). Vertices outside `side_u` stay isolated.
Hypergraph neighborhood_hypergraph(const Graph& g, std::span<const Vertex> side_u, std::span<const Vertex> side_v);

bool is_forest(const Graph& g);
bool is_complete(const Graph& g);

/// Greedy proper coloring in ascending vertex order, smallest free color.
Coloring greedy_coloring(const Graph& g);

/// Colors every connected component independently with `colorer` (applied to
/// the induced subgraph) and stitches the results back together.
Coloring color_components(const Graph& g, const std::function<Coloring(const Graph&)>& colorer);

}  // namespace lidcolor
