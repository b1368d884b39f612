#include <algorithm>

#include "lidcolor/construct.hpp"
#include "lidcolor/exact.hpp"
#include "lidcolor/structure.hpp"

namespace lidcolor::construct {

namespace {

bool has_pendant_neighbor(const Graph& g, Vertex v) {
    const auto nbrs = g.neighbors(v);
    return std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return g.degree(w) == 1; });
}

Coloring color_bipartite_connected(const Graph& g) {
    if (g.size() <= 4) return *exact::k_lid_colorable(g, 4);
    Vertex root = -1;
    for (Vertex v = 0; v < g.size() && root < 0; ++v)
        if (g.degree(v) >= 2 && !has_pendant_neighbor(g, v)) root = v;
    for (Vertex v = 0; v < g.size() && root < 0; ++v)
        if (!has_pendant_neighbor(g, v)) root = v;
    if (root < 0) {
        // Not reachable for connected bipartite graphs on 5+ vertices, kept as a guard.
        return *exact::k_lid_colorable(g, 4);
    }
    const auto dist = bfs_distances(g, root);
    std::vector<Color> colors(g.size());
    for (Vertex v = 0; v < g.size(); ++v) colors[v] = dist[v] % 4;
    return Coloring(std::move(colors));
}

}  // namespace

Coloring color_bipartite(const Graph& g) {
    if (!bipartition(g)) throw InputError("graph is not bipartite");
    return color_components(g, color_bipartite_connected);
}

Coloring color_tree(const Graph& forest) {
    if (!is_forest(forest)) throw InputError("graph is not a forest");
    return color_components(forest, [](const Graph& tree) {
        if (tree.size() >= 3)
            if (auto c = exact::tree_three_lid(tree)) return *c;
        return color_bipartite_connected(tree);
    });
}

Coloring color_product(const Graph& g1, const Graph& g2) {
    auto side_of = [](const Graph& g) {
        auto parts = bipartition(g);
        if (!parts) throw InputError("product factor is not bipartite");
        std::vector<int> side(g.size(), 0);
        for (Vertex v : parts->v) side[v] = 1;
        for (Vertex v = 0; v < g.size(); ++v)
            if (g.degree(v) == 0) throw InputError("product factor has an isolated vertex");
        return side;
    };
    const auto s1 = side_of(g1);
    const auto s2 = side_of(g2);
    const Vertex n2 = g2.size();
    std::vector<Color> colors(static_cast<std::size_t>(g1.size()) * n2);
    for (Vertex a = 0; a < g1.size(); ++a)
        for (Vertex b = 0; b < n2; ++b) {
            Color c = 0;
            if (s1[a] != s2[b]) c = s1[a] == 0 ? 1 : 2;
            colors[a * n2 + b] = c;
        }
    return Coloring(std::move(colors));
}

}  // namespace lidcolor::construct
