#include <algorithm>
#include <set>

#include "lidcolor/gen.hpp"

namespace lidcolor::gen {

Reduction np_reduce(const Hypergraph& h, int g) {
    if (h.edges().empty()) throw InputError("reduction needs at least one hyperedge");
    if (!h.is_uniform(3)) throw InputError("reduction needs a 3-uniform hypergraph");
    if (g < 3) g = 3;

    // Consecutive attachments sit 4s apart, leaving 4s - 1 >= ceil(g/2) vertices
    // of degree two between them.
    const int half = (g + 1) / 2;
    const int s = (half + 1 + 3) / 4;
    const auto deg = h.degrees();

    ReductionMap map;
    map.girth = g;
    std::vector<Edge> edges;
    Vertex next = 0;
    for (Vertex v = 0; v < h.size(); ++v) {
        const int t = deg[v] == 0 ? 1 : 1 + (deg[v] - 1) * s;
        std::vector<Vertex> p(4 * t + 1);
        for (auto& x : p) x = next++;
        for (std::size_t i = 1; i < p.size(); ++i) edges.emplace_back(p[i - 1], p[i]);
        map.paths.push_back(std::move(p));
    }
    map.attachments.resize(h.size());
    for (const auto& e : h.edges()) {
        const Vertex w = next++;
        std::array<Vertex, 3> ends{};
        for (std::size_t i = 0; i < 3; ++i) {
            const Vertex v = e[i];
            const int index = 2 + static_cast<int>(map.attachments[v].size()) * 4 * s;
            map.attachments[v].push_back(index);
            ends[i] = map.paths[v][index];
            edges.emplace_back(w, ends[i]);
        }
        map.hyperedge_vertex.push_back(w);
        map.hyperedges.push_back(e);
        map.hyperedge_ends.push_back(ends);
    }
    return {Graph(next, edges), std::move(map)};
}

Coloring lift_forward(const TwoColoring& two, const ReductionMap& map) {
    if (two.size() != map.paths.size()) throw InputError("2-coloring has the wrong number of vertices");
    for (int x : two)
        if (x != 0 && x != 1) throw InputError("2-coloring must use colors 1 and 2");
    for (const auto& e : map.hyperedges)
        if (two[e[0]] == two[e[1]] && two[e[1]] == two[e[2]])
            throw InputError("2-coloring leaves a hyperedge monochromatic");

    Vertex n = static_cast<Vertex>(map.hyperedge_vertex.size());
    for (const auto& p : map.paths) n += static_cast<Vertex>(p.size());
    std::vector<Color> colors(n, 2);
    for (std::size_t v = 0; v < map.paths.size(); ++v) {
        const auto& p = map.paths[v];
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i % 4 == 2) colors[p[i]] = two[v];
            if (i % 4 == 0) colors[p[i]] = 1 - two[v];
        }
    }
    return Coloring(std::move(colors));
}

TwoColoring lift_backward(const Graph& reduced, const Coloring& c, const ReductionMap& map) {
    if (c.size() != reduced.size()) throw InputError("coloring does not match the graph");
    if (!is_lid_coloring(reduced, c)) throw InputError("coloring is not a lid-coloring");
    const std::vector<Color>& vals = c.values();
    const std::set<Color> palette(vals.begin(), vals.end());
    if (palette.size() > 3) throw InputError("coloring uses more than 3 colors");

    // Odd path positions form the monochromatic side of their component;
    // the two remaining colors become 0 (smaller) and 1.
    TwoColoring two(map.paths.size(), 0);
    for (std::size_t v = 0; v < map.paths.size(); ++v) {
        const auto& p = map.paths[v];
        const Color mono = c[p[1]];
        Color low = -1;
        for (Color x : palette)
            if (x != mono) {
                low = x;
                break;
            }
        two[v] = c[p[2]] == low ? 0 : 1;
    }
    const Hypergraph h(static_cast<Vertex>(map.paths.size()), map.hyperedges);
    if (!is_proper_two_coloring(h, two)) throw InputError("coloring does not induce a proper 2-coloring");
    return two;
}

}  // namespace lidcolor::gen
