#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lidcolor/graph.hpp"

namespace lidcolor {

/// Total vertex coloring; colors are non-negative integers (0-based).
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<Color> colors);
    Coloring(std::initializer_list<Color> colors) : Coloring(std::vector<Color>(colors)) {}

    [[nodiscard]] Vertex size() const { return static_cast<Vertex>(colors_.size()); }
    [[nodiscard]] Color operator[](Vertex v) const { return colors_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] const std::vector<Color>& values() const { return colors_; }

    /// Number of distinct colors used.
    [[nodiscard]] int palette_size() const;
    /// Largest color plus one (0 for an empty coloring).
    [[nodiscard]] int span() const;
    /// Relabels colors to 0..palette_size()-1 in order of first appearance.
    [[nodiscard]] Coloring normalized() const;

    /// Sorted, deduplicated colors of `vertices`.
    [[nodiscard]] std::vector<Color> colors_of(std::span<const Vertex> vertices) const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<Color> colors_;
};

enum class Violation {
    improper,           ///< adjacent vertices share a color
    identical_sets,     ///< c(N[u]) = c(N[v]) although N[u] != N[v]
    full_palette,       ///< non-universal vertex sees every palette color (strong)
    palette_too_large,  ///< more colors than the variant allows (nice)
    wrong_set_size,     ///< |c(N[v])| != 3 for a vertex of degree >= 2 (nice)
};

std::string to_string(Violation v);

/// Failing edge (u, v) with the closed-neighborhood color sets.
/// Vertex-level violations report u == v.
struct Witness {
    Vertex u = 0;
    Vertex v = 0;
    Violation kind = Violation::improper;
    std::vector<Color> colors_u;
    std::vector<Color> colors_v;
};

struct Verdict {
    bool ok = true;
    std::optional<Witness> witness;

    explicit operator bool() const { return ok; }
};

/// Proper and locally identifying: for every edge uv with N[u] != N[v],
/// c(N[u]) != c(N[v]). Reports the first failing edge in lexicographic order.
Verdict is_lid_coloring(const Graph& g, const Coloring& c);

/// Lid coloring within colors 0..k-1 where only universal vertices see all k colors.
Verdict is_strong_lid_coloring(const Graph& g, const Coloring& c, int k);

/// Lid coloring with at most 5 colors where every vertex of degree >= 2 sees exactly 3.
Verdict is_nice_lid_coloring(const Graph& g, const Coloring& c);

/// Proper coloring check only.
bool is_proper_coloring(const Graph& g, const Coloring& c);

}  // namespace lidcolor
