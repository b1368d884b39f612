#include "lidcolor/coloring.hpp"

#include <algorithm>
#include <map>

namespace lidcolor {

Coloring::Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {
    for (Color c : colors_)
        if (c < 0) throw InputError("negative color " + std::to_string(c));
}

int Coloring::palette_size() const {
    std::vector<Color> sorted = colors_;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

int Coloring::span() const {
    Color top = -1;
    for (Color c : colors_) top = std::max(top, c);
    return top + 1;
}

Coloring Coloring::normalized() const {
    std::map<Color, Color> relabel;
    std::vector<Color> out;
    out.reserve(colors_.size());
    for (Color c : colors_) {
        auto [it, inserted] = relabel.emplace(c, static_cast<Color>(relabel.size()));
        out.push_back(it->second);
    }
    return Coloring(std::move(out));
}

std::vector<Color> Coloring::colors_of(std::span<const Vertex> vertices) const {
    std::vector<Color> out;
    out.reserve(vertices.size());
    for (Vertex v : vertices) out.push_back((*this)[v]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string to_string(Violation v) {
    switch (v) {
        case Violation::improper: return "improper";
        case Violation::identical_sets: return "identical-sets";
        case Violation::full_palette: return "full-palette";
        case Violation::palette_too_large: return "palette-too-large";
        case Violation::wrong_set_size: return "wrong-set-size";
    }
    return "unknown";
}

namespace {

void check_length(const Graph& g, const Coloring& c) {
    if (c.size() != g.size())
        throw InputError("coloring has " + std::to_string(c.size()) + " entries for a graph on " +
                         std::to_string(g.size()) + " vertices");
}

std::vector<std::vector<Color>> neighborhood_colors(const Graph& g, const Coloring& c) {
    std::vector<std::vector<Color>> sets;
    sets.reserve(g.size());
    for (Vertex v = 0; v < g.size(); ++v) sets.push_back(c.colors_of(g.closed_neighborhood(v)));
    return sets;
}

Verdict fail(Vertex u, Vertex v, Violation kind, std::vector<Color> cu, std::vector<Color> cv) {
    return Verdict{false, Witness{u, v, kind, std::move(cu), std::move(cv)}};
}

}  // namespace

bool is_proper_coloring(const Graph& g, const Coloring& c) {
    check_length(g, c);
    for (auto [u, v] : g.edges())
        if (c[u] == c[v]) return false;
    return true;
}

Verdict is_lid_coloring(const Graph& g, const Coloring& c) {
    check_length(g, c);
    const auto sets = neighborhood_colors(g, c);
    for (auto [u, v] : g.edges()) {
        const auto& su = sets[u];
        const auto& sv = sets[v];
        if (c[u] == c[v]) return fail(u, v, Violation::improper, su, sv);
        if (su == sv && !g.same_closed_neighborhood(u, v)) return fail(u, v, Violation::identical_sets, su, sv);
    }
    return {};
}

Verdict is_strong_lid_coloring(const Graph& g, const Coloring& c, int k) {
    check_length(g, c);
    for (Color col : c.values())
        if (col >= k) throw InputError("color " + std::to_string(col) + " outside palette of size " + std::to_string(k));
    Verdict base = is_lid_coloring(g, c);
    if (!base.ok) return base;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (static_cast<Vertex>(g.degree(v)) == g.size() - 1) continue;
        auto seen = c.colors_of(g.closed_neighborhood(v));
        if (static_cast<int>(seen.size()) == k) return fail(v, v, Violation::full_palette, seen, seen);
    }
    return {};
}

Verdict is_nice_lid_coloring(const Graph& g, const Coloring& c) {
    Verdict base = is_lid_coloring(g, c);
    if (!base.ok) return base;
    if (c.palette_size() > 5) return fail(0, 0, Violation::palette_too_large, {}, {});
    for (Vertex v = 0; v < g.size(); ++v) {
        if (g.degree(v) < 2) continue;
        auto seen = c.colors_of(g.closed_neighborhood(v));
        if (seen.size() != 3) return fail(v, v, Violation::wrong_set_size, seen, seen);
    }
    return {};
}

}  // namespace lidcolor
