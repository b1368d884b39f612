#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lidcolor {

using Vertex = std::int32_t;
using Color = std::int32_t;

/// Raised when an operation receives input that violates its precondition
/// (malformed file, wrong graph class, inconsistent certificate, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Immutable once built. Self-loops are rejected; repeated edges are merged.
class Graph {
public:
    Graph() = default;
    explicit Graph(Vertex n);
    Graph(Vertex n, std::span<const Edge> edges);
    Graph(Vertex n, std::initializer_list<Edge> edges);

    [[nodiscard]] Vertex size() const { return static_cast<Vertex>(adj_.size()); }
    [[nodiscard]] std::size_t edge_count() const { return edge_count_; }
    [[nodiscard]] bool empty() const { return adj_.empty(); }

    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
    [[nodiscard]] std::size_t max_degree() const;
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;

    /// Closed neighborhood N[v], sorted.
    [[nodiscard]] std::vector<Vertex> closed_neighborhood(Vertex v) const;
    [[nodiscard]] bool same_closed_neighborhood(Vertex u, Vertex v) const;

    /// Edges (u, v) with u < v in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const;

    /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
    [[nodiscard]] Graph induced(std::span<const Vertex> vertices) const;
    [[nodiscard]] Graph complement() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void add_edges(std::span<const Edge> edges);

    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// BFS distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

}  // namespace lidcolor
