#include <algorithm>
#include <set>

#include "lidcolor/construct.hpp"

namespace lidcolor::construct {

namespace {

bool is_clique(const Graph& g, const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

long long expected_edges(long long n, long long k) { return k * n - k * (k + 1) / 2; }

}  // namespace

std::optional<KTreeOrder> find_ktree_order(const Graph& g, int k) {
    if (k < 1) throw InputError("k must be at least 1");
    const Vertex n = g.size();
    if (n < k + 1) return std::nullopt;
    if (static_cast<long long>(g.edge_count()) != expected_edges(n, k)) return std::nullopt;

    std::vector<char> alive(n, 1);
    std::vector<int> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = static_cast<int>(g.degree(v));
    std::set<Vertex> candidates;
    for (Vertex v = 0; v < n; ++v)
        if (deg[v] == k) candidates.insert(v);

    auto alive_neighbors = [&](Vertex v) {
        std::vector<Vertex> out;
        for (Vertex w : g.neighbors(v))
            if (alive[w]) out.push_back(w);
        return out;
    };

    std::vector<Vertex> removed;
    Vertex remaining = n;
    while (remaining > k + 1) {
        Vertex pick = -1;
        for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
            if (is_clique(g, alive_neighbors(*it))) {
                pick = *it;
                break;
            }
        }
        if (pick < 0) return std::nullopt;
        candidates.erase(pick);
        alive[pick] = 0;
        --remaining;
        removed.push_back(pick);
        for (Vertex w : g.neighbors(pick)) {
            if (!alive[w]) continue;
            if (--deg[w] == k) candidates.insert(w);
            else candidates.erase(w);
        }
    }

    KTreeOrder out{k, {}};
    for (Vertex v = 0; v < n; ++v)
        if (alive[v]) out.order.push_back(v);
    if (!is_clique(g, out.order)) return std::nullopt;
    out.order.insert(out.order.end(), removed.rbegin(), removed.rend());
    return out;
}

std::optional<KTreeOrder> find_ktree_order(const Graph& g) {
    const long long n = g.size();
    for (long long k = 1; k < n; ++k) {
        const long long m = expected_edges(n, k);
        if (m == static_cast<long long>(g.edge_count())) return find_ktree_order(g, static_cast<int>(k));
        if (m > static_cast<long long>(g.edge_count())) break;
    }
    return std::nullopt;
}

void validate_ktree_order(const Graph& g, const KTreeOrder& ord) {
    const Vertex n = g.size();
    const int k = ord.k;
    if (k < 1) throw InputError("k must be at least 1");
    if (static_cast<Vertex>(ord.order.size()) != n || n < k + 1)
        throw InputError("k-tree order must list every vertex once");
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < ord.order.size(); ++i) {
        const Vertex v = ord.order[i];
        if (v < 0 || v >= n || pos[v] >= 0) throw InputError("k-tree order must list every vertex once");
        pos[v] = static_cast<int>(i);
    }
    const std::vector<Vertex> base(ord.order.begin(), ord.order.begin() + k + 1);
    if (!is_clique(g, base)) throw InputError("first k+1 vertices of the order are not a clique");
    for (std::size_t i = static_cast<std::size_t>(k) + 1; i < ord.order.size(); ++i) {
        const Vertex v = ord.order[i];
        std::vector<Vertex> back;
        for (Vertex w : g.neighbors(v))
            if (pos[w] < pos[v]) back.push_back(w);
        if (static_cast<int>(back.size()) != k || !is_clique(g, back))
            throw InputError("vertex " + std::to_string(v + 1) + " does not attach to a k-clique");
    }
}

Coloring color_ktree(const Graph& g, const KTreeOrder& ord) {
    validate_ktree_order(g, ord);
    const int k = ord.k;
    const int modulus = 2 * k + 2;
    const Vertex n = g.size();
    std::vector<int> pos(n);
    for (std::size_t i = 0; i < ord.order.size(); ++i) pos[ord.order[i]] = static_cast<int>(i);

    std::vector<Color> colors(n, -1);
    for (int i = 0; i <= k; ++i) colors[ord.order[i]] = (i + 1) % modulus;
    for (std::size_t i = static_cast<std::size_t>(k) + 1; i < ord.order.size(); ++i) {
        const Vertex v = ord.order[i];
        std::vector<Vertex> back;
        for (Vertex w : g.neighbors(v))
            if (pos[w] < pos[v]) back.push_back(w);
        // Earliest vertex completing the back-neighborhood to a (k+1)-clique.
        Vertex completion = -1;
        for (Vertex w : g.neighbors(back.front())) {
            if (pos[w] >= pos[v] || std::find(back.begin(), back.end(), w) != back.end()) continue;
            const bool full = std::all_of(back.begin(), back.end(), [&](Vertex x) { return g.adjacent(w, x); });
            if (full && (completion < 0 || pos[w] < pos[completion])) completion = w;
        }
        colors[v] = (colors[completion] + k + 1) % modulus;
    }
    return Coloring(std::move(colors));
}

}  // namespace lidcolor::construct
