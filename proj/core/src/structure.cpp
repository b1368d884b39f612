#include "lidcolor/structure.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace lidcolor {

std::optional<int> girth(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(g.size());
    std::vector<Vertex> parent(g.size());
    for (Vertex root = 0; root < g.size(); ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<Vertex> queue;
        dist[root] = 0;
        parent[root] = -1;
        queue.push(root);
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop();
            if (2 * dist[x] + 1 >= best) break;
            for (Vertex y : g.neighbors(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push(y);
                } else if (parent[x] != y) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    std::vector<int> side(g.size(), -1);
    for (Vertex s = 0; s < g.size(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::queue<Vertex> queue;
        queue.push(s);
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop();
            for (Vertex y : g.neighbors(x)) {
                if (side[y] < 0) {
                    side[y] = 1 - side[x];
                    queue.push(y);
                } else if (side[y] == side[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition out;
    for (Vertex v = 0; v < g.size(); ++v) (side[v] == 0 ? out.u : out.v).push_back(v);
    return out;
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
    const Vertex n1 = g1.size(), n2 = g2.size();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n1) * g2.edge_count() + static_cast<std::size_t>(n2) * g1.edge_count());
    for (auto [a, c] : g1.edges())
        for (Vertex b = 0; b < n2; ++b) edges.emplace_back(a * n2 + b, c * n2 + b);
    for (Vertex a = 0; a < n1; ++a)
        for (auto [b, d] : g2.edges()) edges.emplace_back(a * n2 + b, a * n2 + d);
    return Graph(n1 * n2, edges);
}

BlockDecomposition blocks(const Graph& g) {
    const Vertex n = g.size();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<Edge> edge_stack;
    BlockDecomposition out;
    int timer = 0;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
        int children;
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            out.blocks.push_back({root});
            continue;
        }
        std::vector<Frame> stack{{root, -1, 0, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                Vertex w = nbrs[f.next++];
                if (disc[w] < 0) {
                    edge_stack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    ++f.children;
                    stack.push_back({w, f.v, 0, 0});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (stack.empty()) {
                if (done.children >= 2) is_cut[done.v] = 1;
                continue;
            }
            Vertex p = done.parent;
            low[p] = std::min(low[p], low[done.v]);
            if (low[done.v] >= disc[p]) {
                if (stack.size() > 1) is_cut[p] = 1;
                std::vector<Vertex> block;
                while (true) {
                    Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(e.first);
                    block.push_back(e.second);
                    if (e == Edge{p, done.v}) break;
                }
                std::sort(block.begin(), block.end());
                block.erase(std::unique(block.begin(), block.end()), block.end());
                out.blocks.push_back(std::move(block));
            }
        }
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    for (Vertex v = 0; v < n; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

Hypergraph neighborhood_hypergraph(const Graph& g, std::span<const Vertex> side_u, std::span<const Vertex> side_v) {
    std::vector<char> in_u(g.size(), 0);
    for (Vertex u : side_u) in_u[u] = 1;
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(side_v.size());
    for (Vertex v : side_v) {
        std::vector<Vertex> e;
        for (Vertex w : g.neighbors(v)) {
            if (!in_u[w]) throw InputError("vertex sets do not form a bipartition");
            e.push_back(w);
        }
        edges.push_back(std::move(e));
    }
    return Hypergraph(g.size(), std::move(edges));
}

bool is_forest(const Graph& g) {
    return g.edge_count() + connected_components(g).size() == static_cast<std::size_t>(g.size());
}

bool is_complete(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.size());
    return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

Coloring greedy_coloring(const Graph& g) {
    std::vector<Color> colors(g.size(), -1);
    std::vector<char> used;
    for (Vertex v = 0; v < g.size(); ++v) {
        used.assign(g.degree(v) + 1, 0);
        for (Vertex w : g.neighbors(v))
            if (colors[w] >= 0 && colors[w] < static_cast<Color>(used.size())) used[colors[w]] = 1;
        Color c = 0;
        while (used[c]) ++c;
        colors[v] = c;
    }
    return Coloring(std::move(colors));
}

Coloring color_components(const Graph& g, const std::function<Coloring(const Graph&)>& colorer) {
    std::vector<Color> colors(g.size(), 0);
    for (const auto& comp : connected_components(g)) {
        Coloring part = colorer(g.induced(comp));
        for (std::size_t i = 0; i < comp.size(); ++i) colors[comp[i]] = part[static_cast<Vertex>(i)];
    }
    return Coloring(std::move(colors));
}

}  // namespace lidcolor
