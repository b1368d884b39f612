#include <algorithm>
#include <array>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include "lidcolor/construct.hpp"

namespace lidcolor::construct {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

// Start candidates: every neighbor of v is adjacent to v on the cycle.
bool is_ear(const Graph& g, const std::vector<Vertex>& cycle, const std::vector<int>& pos, Vertex v) {
    const int n = static_cast<int>(cycle.size());
    const int p = pos[v];
    const Vertex prev = cycle[(p + n - 1) % n];
    const Vertex next = cycle[(p + 1) % n];
    const auto nbrs = g.neighbors(v);
    return std::all_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return w == prev || w == next; });
}

std::vector<int> positions(Vertex n, const std::vector<Vertex>& cycle) {
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < cycle.size(); ++i) pos[cycle[i]] = static_cast<int>(i);
    return pos;
}

bool has_crossing(const Graph& g, const std::vector<int>& pos) {
    std::vector<std::pair<int, int>> chords;
    for (auto [u, v] : g.edges()) chords.emplace_back(std::min(pos[u], pos[v]), std::max(pos[u], pos[v]));
    for (std::size_t i = 0; i < chords.size(); ++i)
        for (std::size_t j = 0; j < chords.size(); ++j) {
            const auto [a, b] = chords[i];
            const auto [c, d] = chords[j];
            if (a < c && c < b && b < d) return true;
        }
    return false;
}

// Rotates `cycle` so that it starts at its lowest-id ear.
void rotate_to_ear(const Graph& g, std::vector<Vertex>& cycle) {
    const auto pos = positions(g.size(), cycle);
    Vertex start = -1;
    for (Vertex v = 0; v < g.size() && start < 0; ++v)
        if (is_ear(g, cycle, pos, v)) start = v;
    if (start < 0) throw InputError("outer order has no admissible start vertex");
    std::rotate(cycle.begin(), cycle.begin() + pos[start], cycle.end());
}

Coloring algorithm1(const Graph& g, const std::vector<Vertex>& cycle) {
    const Vertex n = g.size();
    const auto pos = positions(n, cycle);
    const auto dist = bfs_distances(g, cycle[0]);
    int depth = 0;
    for (int d : dist) depth = std::max(depth, d);
    std::vector<std::vector<Vertex>> layer(depth + 2);
    for (Vertex v : cycle) layer[dist[v]].push_back(v);  // already in cycle order

    std::vector<Color> colors(n, -1);
    std::vector<char> marked(n, 0);
    colors[cycle[0]] = 0;
    if (depth >= 1) marked[layer[1].back()] = 1;
    for (int i = 1; i <= depth; ++i) {
        for (Vertex v : layer[i]) {
            Vertex last = -1;
            for (Vertex w : g.neighbors(v))
                if (dist[w] == i + 1 && (last < 0 || pos[w] > pos[last])) last = w;
            if (last >= 0) marked[last] = 1;
        }
        const Color base = 5 * (i % 4);
        std::array<Color, 4> cur{base, base + 1, base + 2, base + 3};
        Color forbidden = base + 4;
        for (std::size_t idx = 0; idx < layer[i].size(); ++idx) {
            const int j = static_cast<int>(idx) + 1;
            const Vertex v = layer[i][idx];
            colors[v] = cur[j % 4];
            if (marked[v]) {
                const Color tmp = cur[(j + 1) % 4];
                cur[(j + 1) % 4] = forbidden;
                forbidden = cur[(j + 3) % 4];
                cur[(j + 3) % 4] = tmp;
            }
        }
    }
    return Coloring(std::move(colors));
}

}  // namespace

std::optional<OuterOrder> outer_order(const Graph& g) {
    const Vertex n = g.size();
    if (n <= 2) {
        OuterOrder oo;
        for (Vertex v = 0; v < n; ++v) oo.cycle.push_back(v);
        return oo;
    }
    // G is outerplanar iff G plus a vertex adjacent to everything is planar;
    // the rotation at that apex is then a non-crossing cyclic order of V.
    BoostGraph bg(n + 1);
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    for (Vertex v = 0; v < n; ++v) boost::add_edge(n, v, bg);
    auto edge_index = boost::get(boost::edge_index, bg);
    int next_index = 0;
    for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(edge_index, *it, next_index++);

    std::vector<std::vector<BoostEdge>> embedding(boost::num_vertices(bg));
    const bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = &embedding[0]);
    if (!planar) return std::nullopt;

    OuterOrder oo;
    for (const BoostEdge& e : embedding[n]) {
        const auto s = static_cast<Vertex>(boost::source(e, bg));
        const auto t = static_cast<Vertex>(boost::target(e, bg));
        oo.cycle.push_back(s == n ? t : s);
    }
    rotate_to_ear(g, oo.cycle);
    return oo;
}

void validate_outer_order(const Graph& g, const OuterOrder& oo) {
    const Vertex n = g.size();
    if (static_cast<Vertex>(oo.cycle.size()) != n) throw InputError("outer order must list every vertex once");
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < oo.cycle.size(); ++i) {
        const Vertex v = oo.cycle[i];
        if (v < 0 || v >= n || pos[v] >= 0) throw InputError("outer order must list every vertex once");
        pos[v] = static_cast<int>(i);
    }
    if (has_crossing(g, pos)) throw InputError("outer order has crossing chords");
    if (n > 0 && is_connected(g) && !is_ear(g, oo.cycle, pos, oo.cycle[0]))
        throw InputError("outer order starts at a vertex with a chord");
}

Coloring color_outerplanar(const Graph& g, const OuterOrder& oo) {
    validate_outer_order(g, oo);
    std::vector<Color> colors(g.size(), 0);
    for (const auto& comp : connected_components(g)) {
        std::vector<Vertex> local_id(g.size(), -1);
        for (std::size_t i = 0; i < comp.size(); ++i) local_id[comp[i]] = static_cast<Vertex>(i);
        const Graph sub = g.induced(comp);
        std::vector<Vertex> cycle;
        for (Vertex v : oo.cycle)
            if (local_id[v] >= 0) cycle.push_back(local_id[v]);
        if (!is_ear(sub, cycle, positions(sub.size(), cycle), cycle[0])) rotate_to_ear(sub, cycle);
        const Coloring part = algorithm1(sub, cycle);
        for (std::size_t i = 0; i < comp.size(); ++i) colors[comp[i]] = part[static_cast<Vertex>(i)];
    }
    return Coloring(std::move(colors));
}

}  // namespace lidcolor::construct
