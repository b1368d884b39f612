#pragma once

#include <optional>
#include <vector>

#include "lidcolor/graph.hpp"

namespace lidcolor {

/// Hypergraph on vertices 0..n-1. Hyperedges are sorted vertex lists;
/// duplicate hyperedges are kept.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(Vertex n, std::vector<std::vector<Vertex>> edges);

    [[nodiscard]] Vertex size() const { return n_; }
    [[nodiscard]] const std::vector<std::vector<Vertex>>& edges() const { return edges_; }
    [[nodiscard]] bool is_uniform(std::size_t r) const;
    [[nodiscard]] std::vector<int> degrees() const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    Vertex n_ = 0;
    std::vector<std::vector<Vertex>> edges_;
};

/// Colors 0/1 per vertex, no hyperedge monochromatic.
using TwoColoring = std::vector<int>;

/// Backtracking search with unit propagation; branches on vertices in
/// ascending id order, color 0 before 1. Throws InputError on an empty hyperedge.
std::optional<TwoColoring> two_color_hypergraph(const Hypergraph& h);

bool is_proper_two_coloring(const Hypergraph& h, const TwoColoring& c);

}  // namespace lidcolor
