#include "lidcolor/graph.hpp"

#include <algorithm>
#include <queue>

namespace lidcolor {

Graph::Graph(Vertex n) {
    if (n < 0) throw InputError("negative vertex count");
    adj_.resize(n);
}

Graph::Graph(Vertex n, std::span<const Edge> edges) : Graph(n) { add_edges(edges); }

Graph::Graph(Vertex n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::add_edges(std::span<const Edge> edges) {
    const Vertex n = size();
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    edge_count_ = 0;
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        edge_count_ += list.size();
    }
    edge_count_ /= 2;
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& list : adj_) best = std::max(best, list.size());
    return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Vertex> Graph::closed_neighborhood(Vertex v) const {
    const auto& list = adj_[v];
    std::vector<Vertex> out;
    out.reserve(list.size() + 1);
    auto it = std::lower_bound(list.begin(), list.end(), v);
    out.insert(out.end(), list.begin(), it);
    out.push_back(v);
    out.insert(out.end(), it, list.end());
    return out;
}

bool Graph::same_closed_neighborhood(Vertex u, Vertex v) const {
    if (degree(u) != degree(v)) return false;
    return closed_neighborhood(u) == closed_neighborhood(v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    std::vector<Vertex> index(adj_.size(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[static_cast<std::size_t>(vertices[i])] = static_cast<Vertex>(i);
    std::vector<Edge> sub;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : neighbors(vertices[i])) {
            Vertex j = index[w];
            if (j > static_cast<Vertex>(i)) sub.emplace_back(static_cast<Vertex>(i), j);
        }
    return Graph(static_cast<Vertex>(vertices.size()), sub);
}

Graph Graph::complement() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v = u + 1; v < size(); ++v)
            if (!adjacent(u, v)) out.emplace_back(u, v);
    return Graph(size(), out);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> comps;
    std::vector<char> seen(g.size(), 0);
    for (Vertex s = 0; s < g.size(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (Vertex w : g.neighbors(comp[head]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    std::vector<int> dist(g.size(), -1);
    std::queue<Vertex> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop();
        for (Vertex w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
    }
    return dist;
}

}  // namespace lidcolor
