#include <algorithm>
#include <limits>
#include <numeric>

#include "lidcolor/gen.hpp"

namespace lidcolor::gen {

std::uint64_t uniform(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform: empty range");
    // Largest multiple of bound that fits; draws above it are rejected.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % bound;
}

namespace {

Vertex pick(Rng& rng, Vertex bound) { return static_cast<Vertex>(uniform(rng, static_cast<std::uint64_t>(bound))); }

std::vector<Vertex> random_permutation(Vertex n, Rng& rng) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (Vertex i = n - 1; i > 0; --i) std::swap(perm[i], perm[pick(rng, i + 1)]);
    return perm;
}

std::vector<Edge> relabel(const std::vector<Edge>& edges, const std::vector<Vertex>& perm) {
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (auto [u, v] : edges) out.emplace_back(perm[u], perm[v]);
    return out;
}

// Polygon 0..n-1 triangulated at random.
std::vector<Edge> triangulated_polygon(Vertex n, Rng& rng) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    if (n >= 3) edges.emplace_back(0, n - 1);
    std::vector<std::pair<Vertex, Vertex>> todo{{0, n - 1}};
    while (!todo.empty()) {
        const auto [i, j] = todo.back();
        todo.pop_back();
        if (j - i < 2) continue;
        const Vertex k = i + 1 + pick(rng, j - i - 1);
        if (k - i >= 2) edges.emplace_back(i, k);
        if (j - k >= 2) edges.emplace_back(k, j);
        todo.emplace_back(i, k);
        todo.emplace_back(k, j);
    }
    return edges;
}

void random_cograph_edges(std::vector<Vertex> vs, Rng& rng, std::vector<Edge>& edges) {
    if (vs.size() <= 1) return;
    const auto size = static_cast<Vertex>(vs.size());
    const Vertex parts = 2 + pick(rng, std::min<Vertex>(size, 3) - 1);
    // Cut the (already shuffled) list at parts-1 distinct random points.
    std::vector<Vertex> cuts;
    while (static_cast<Vertex>(cuts.size()) < parts - 1) {
        const Vertex c = 1 + pick(rng, size - 1);
        if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(size);
    const bool join = uniform(rng, 2) == 1;
    std::vector<std::vector<Vertex>> groups;
    Vertex from = 0;
    for (Vertex c : cuts) {
        groups.emplace_back(vs.begin() + from, vs.begin() + c);
        from = c;
    }
    if (join)
        for (std::size_t a = 0; a < groups.size(); ++a)
            for (std::size_t b = a + 1; b < groups.size(); ++b)
                for (Vertex x : groups[a])
                    for (Vertex y : groups[b]) edges.emplace_back(x, y);
    for (auto& grp : groups) random_cograph_edges(std::move(grp), rng, edges);
}

}  // namespace

Graph random_tree(Vertex n, Rng& rng) {
    if (n < 1) throw InputError("tree needs at least one vertex");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(pick(rng, v), v);
    return Graph(n, relabel(edges, random_permutation(n, rng)));
}

Graph random_bipartite(Vertex a, Vertex b, int per_mille, Rng& rng) {
    if (a < 1 || b < 1) throw InputError("bipartite graph needs two nonempty sides");
    // Spanning tree first: vertex a joins 0, then each remaining vertex joins a
    // random already placed vertex of the other side.
    std::vector<Vertex> placed_u{0}, placed_v{a};
    std::vector<Edge> edges{{0, a}};
    std::vector<Vertex> rest;
    for (Vertex v = 1; v < a; ++v) rest.push_back(v);
    for (Vertex v = a + 1; v < a + b; ++v) rest.push_back(v);
    const auto order = random_permutation(static_cast<Vertex>(rest.size()), rng);
    for (Vertex i : order) {
        const Vertex v = rest[i];
        if (v < a) {
            edges.emplace_back(v, placed_v[pick(rng, static_cast<Vertex>(placed_v.size()))]);
            placed_u.push_back(v);
        } else {
            edges.emplace_back(placed_u[pick(rng, static_cast<Vertex>(placed_u.size()))], v);
            placed_v.push_back(v);
        }
    }
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v)
            if (static_cast<int>(uniform(rng, 1000)) < per_mille) edges.emplace_back(u, v);
    return Graph(a + b, edges);
}

construct::IntervalSet random_intervals(Vertex n, Rng& rng) {
    if (n < 1) throw InputError("interval family needs at least one interval");
    construct::IntervalSet out;
    const Vertex span = 2 * n;
    const Vertex max_len = std::max<Vertex>(1, n / 3);
    for (Vertex v = 0; v < n; ++v) {
        const long long a = pick(rng, span);
        out.push_back({a, a + pick(rng, max_len + 1)});
    }
    return out;
}

std::pair<Graph, construct::KTreeOrder> random_ktree(Vertex n, int k, Rng& rng) {
    if (k < 1 || n < k + 1) throw InputError("k-tree needs k >= 1 and n >= k + 1");
    std::vector<std::vector<Vertex>> cliques;
    std::vector<Edge> edges;
    std::vector<Vertex> first(k + 1);
    std::iota(first.begin(), first.end(), 0);
    for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) edges.emplace_back(i, j);
    cliques.push_back(first);
    for (Vertex v = k + 1; v < n; ++v) {
        std::vector<Vertex> base = cliques[pick(rng, static_cast<Vertex>(cliques.size()))];
        base.erase(base.begin() + pick(rng, k + 1));
        for (Vertex u : base) edges.emplace_back(u, v);
        base.push_back(v);
        cliques.push_back(std::move(base));
    }
    const auto perm = random_permutation(n, rng);
    construct::KTreeOrder order{k, perm};
    return {Graph(n, relabel(edges, perm)), std::move(order)};
}

std::pair<Graph, construct::OuterOrder> random_maximal_outerplanar(Vertex n, Rng& rng) {
    if (n < 3) throw InputError("maximal outerplanar graph needs at least three vertices");
    const auto perm = random_permutation(n, rng);
    Graph g(n, relabel(triangulated_polygon(n, rng), perm));
    construct::OuterOrder oo{perm};
    // Degree-2 vertices of a maximal outerplanar graph are exactly the ears.
    Vertex start = 0;
    while (g.degree(start) != 2) ++start;
    std::rotate(oo.cycle.begin(), std::find(oo.cycle.begin(), oo.cycle.end(), start), oo.cycle.end());
    return {std::move(g), std::move(oo)};
}

Graph random_split(Vertex k, Vertex s, Rng& rng) {
    if (k < 1 || s < 0) throw InputError("split graph needs a nonempty clique");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < k; ++i)
        for (Vertex j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    for (Vertex x = k; x < k + s; ++x) {
        const auto density = uniform(rng, 1000);
        for (Vertex i = 0; i < k; ++i)
            if (uniform(rng, 1000) < density) edges.emplace_back(i, x);
    }
    return Graph(k + s, edges);
}

Graph random_cograph(Vertex n, Rng& rng) {
    if (n < 1) throw InputError("cograph needs at least one vertex");
    std::vector<Edge> edges;
    random_cograph_edges(random_permutation(n, rng), rng, edges);
    return Graph(n, edges);
}

Graph random_subdivided_planar(Vertex base, int girth, Rng& rng) {
    if (base < 1 || girth < 3) throw InputError("subdivided planar graph needs base >= 1 and girth >= 3");
    std::vector<Edge> base_edges;
    if (base == 2) base_edges.emplace_back(0, 1);
    if (base >= 3)
        for (auto e : triangulated_polygon(base, rng))
            if (uniform(rng, 4) != 0) base_edges.push_back(e);
    // Every base cycle has length >= 3, so segments of length ceil(g/3) suffice.
    const Vertex seg = (girth + 2) / 3;
    std::vector<Edge> edges;
    Vertex next = base;
    for (auto [u, v] : base_edges) {
        Vertex prev = u;
        for (Vertex i = 1; i < seg; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, v);
    }
    return Graph(next, edges);
}

Graph random_block_graph(int pieces, Rng& rng) {
    if (pieces < 0) throw InputError("block graph needs a nonnegative piece count");
    std::vector<Edge> edges;
    Vertex n = 1;
    for (int i = 0; i < pieces; ++i) {
        const Vertex v = pick(rng, n);
        if (uniform(rng, 2) == 0) {
            edges.emplace_back(v, n);
            n += 1;
        } else {
            edges.emplace_back(v, n);
            edges.emplace_back(v, n + 1);
            edges.emplace_back(n, n + 1);
            n += 2;
        }
    }
    return Graph(n, edges);
}

}  // namespace lidcolor::gen
