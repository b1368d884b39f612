#include "lidcolor/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "lidcolor/structure.hpp"

namespace lidcolor::exact {

std::vector<Vertex> degeneracy_order(const Graph& g) {
    const Vertex n = g.size();
    std::vector<int> deg(n);
    std::vector<char> removed(n, 0);
    for (Vertex v = 0; v < n; ++v) deg[v] = static_cast<int>(g.degree(v));
    std::vector<Vertex> order;
    order.reserve(n);
    for (Vertex step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        removed[best] = 1;
        order.push_back(best);
        for (Vertex w : g.neighbors(best))
            if (!removed[w]) --deg[w];
    }
    std::reverse(order.begin(), order.end());
    return order;
}

namespace {

class LidSearch {
public:
    LidSearch(const Graph& g, int k)
        : g_(g), k_(k), order_(degeneracy_order(g)), colors_(g.size(), -1), remaining_(g.size()),
          count_(static_cast<std::size_t>(g.size()) * static_cast<std::size_t>(k), 0), mask_(g.size(), 0),
          partners_(g.size()) {
        for (Vertex v = 0; v < g.size(); ++v) {
            remaining_[v] = static_cast<int>(g.degree(v)) + 1;
            for (Vertex w : g.neighbors(v))
                if (!g.same_closed_neighborhood(v, w)) partners_[v].push_back(w);
        }
    }

    std::optional<Coloring> run() {
        if (!search(0, 0)) return std::nullopt;
        return Coloring(colors_);
    }

private:
    bool search(std::size_t idx, int used) {
        if (idx == order_.size()) return true;
        const Vertex v = order_[idx];
        // Colors beyond used are interchangeable, so only the first fresh one is tried.
        const int limit = std::min(k_, used + 1);
        for (Color c = 0; c < limit; ++c) {
            if (!compatible(v, c)) continue;
            const bool ok = place(v, c);
            if (ok && search(idx + 1, std::max(used, c + 1))) return true;
            unplace(v, c);
        }
        return false;
    }

    bool compatible(Vertex v, Color c) const {
        for (Vertex w : g_.neighbors(v))
            if (colors_[w] == c) return false;
        return true;
    }

    void touch(Vertex x, Color c) {
        --remaining_[x];
        if (count_[slot(x, c)]++ == 0) mask_[x] |= std::uint64_t{1} << c;
    }

    void untouch(Vertex x, Color c) {
        ++remaining_[x];
        if (--count_[slot(x, c)] == 0) mask_[x] &= ~(std::uint64_t{1} << c);
    }

    bool place(Vertex v, Color c) {
        colors_[v] = c;
        touch(v, c);
        for (Vertex x : g_.neighbors(v)) touch(x, c);
        return complete_ok(v) && std::all_of(g_.neighbors(v).begin(), g_.neighbors(v).end(),
                                             [this](Vertex x) { return complete_ok(x); });
    }

    void unplace(Vertex v, Color c) {
        untouch(v, c);
        for (Vertex x : g_.neighbors(v)) untouch(x, c);
        colors_[v] = -1;
    }

    bool complete_ok(Vertex x) const {
        if (remaining_[x] != 0) return true;
        for (Vertex w : partners_[x])
            if (remaining_[w] == 0 && mask_[w] == mask_[x]) return false;
        return true;
    }

    [[nodiscard]] std::size_t slot(Vertex x, Color c) const {
        return static_cast<std::size_t>(x) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c);
    }

    const Graph& g_;
    int k_;
    std::vector<Vertex> order_;
    std::vector<Color> colors_;
    std::vector<int> remaining_;
    std::vector<int> count_;
    std::vector<std::uint64_t> mask_;
    std::vector<std::vector<Vertex>> partners_;
};

Coloring all_distinct(Vertex n) {
    std::vector<Color> colors(n);
    std::iota(colors.begin(), colors.end(), 0);
    return Coloring(std::move(colors));
}

// Exact search on a connected graph.
std::optional<Coloring> solve_connected(const Graph& g, int k) {
    const Vertex n = g.size();
    if (n <= 2) {
        if (k < n) return std::nullopt;
        return all_distinct(n);
    }
    if (k <= 2) return std::nullopt;
    if (k >= n && n > 64) return all_distinct(n);
    k = std::min(k, static_cast<int>(n));
    if (k > 64) throw InputError("exact search supports at most 64 colors");
    return LidSearch(g, k).run();
}

}  // namespace

std::optional<Coloring> k_lid_colorable(const Graph& g, int k) {
    if (k < 1) throw InputError("k must be at least 1");
    std::vector<Color> colors(g.size(), 0);
    for (const auto& comp : connected_components(g)) {
        auto part = solve_connected(g.induced(comp), k);
        if (!part) return std::nullopt;
        for (std::size_t i = 0; i < comp.size(); ++i) colors[comp[i]] = (*part)[static_cast<Vertex>(i)];
    }
    return Coloring(std::move(colors));
}

ChromaticResult lid_chromatic(const Graph& g, int k_max) {
    if (k_max < 1) throw InputError("k_max must be at least 1");
    std::vector<Color> colors(g.size(), 0);
    int value = g.size() == 0 ? 0 : 1;
    for (const auto& comp : connected_components(g)) {
        const Graph sub = g.induced(comp);
        std::optional<Coloring> found;
        // Connected graphs on three or more vertices need at least 3 colors.
        int k = sub.size() <= 2 ? sub.size() : 3;
        for (; k <= k_max; ++k)
            if ((found = solve_connected(sub, k))) break;
        if (!found) return {};
        value = std::max(value, k);
        for (std::size_t i = 0; i < comp.size(); ++i) colors[comp[i]] = (*found)[static_cast<Vertex>(i)];
    }
    return {value, Coloring(std::move(colors))};
}

std::optional<Coloring> three_lid_decide(const Graph& g) {
    const Vertex n = g.size();
    if (n == 0) return Coloring{};
    if (!is_connected(g)) throw InputError("three_lid_decide expects a connected graph");
    if (n <= 2) return all_distinct(n);
    if (n == 3 && g.edge_count() == 3) return all_distinct(3);
    auto parts = bipartition(g);
    if (!parts) return std::nullopt;
    // One side is monochromatic, the other side 2-colored so that no
    // vertex of the first side sees a single color.
    auto try_side = [&](const std::vector<Vertex>& colored, const std::vector<Vertex>& mono) -> std::optional<Coloring> {
        auto split = two_color_hypergraph(neighborhood_hypergraph(g, colored, mono));
        if (!split) return std::nullopt;
        std::vector<Color> colors(n, 2);
        for (Vertex u : colored) colors[u] = (*split)[u];
        return Coloring(std::move(colors));
    };
    if (auto c = try_side(parts->u, parts->v)) return c;
    return try_side(parts->v, parts->u);
}

std::optional<Coloring> tree_three_lid(const Graph& tree) {
    const Vertex n = tree.size();
    if (n < 3 || !is_connected(tree) || !is_forest(tree)) throw InputError("tree_three_lid expects a tree on at least 3 vertices");
    Vertex leaf = 0;
    while (tree.degree(leaf) != 1) ++leaf;
    const auto dist = bfs_distances(tree, leaf);
    for (Vertex v = 0; v < n; ++v)
        if (tree.degree(v) == 1 && dist[v] % 2 != 0) return std::nullopt;
    std::vector<Color> colors(n);
    for (Vertex v = 0; v < n; ++v) colors[v] = dist[v] % 2 == 1 ? 1 : (dist[v] % 4 == 0 ? 0 : 2);
    return Coloring(std::move(colors));
}

}  // namespace lidcolor::exact
