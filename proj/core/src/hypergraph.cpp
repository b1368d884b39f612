#include "lidcolor/hypergraph.hpp"

#include <algorithm>
#include <array>

namespace lidcolor {

Hypergraph::Hypergraph(Vertex n, std::vector<std::vector<Vertex>> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw InputError("negative vertex count");
    for (auto& e : edges_) {
        for (Vertex v : e)
            if (v < 0 || v >= n) throw InputError("hyperedge vertex out of range: " + std::to_string(v));
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw InputError("hyperedge repeats a vertex");
    }
}

bool Hypergraph::is_uniform(std::size_t r) const {
    return std::all_of(edges_.begin(), edges_.end(), [r](const auto& e) { return e.size() == r; });
}

std::vector<int> Hypergraph::degrees() const {
    std::vector<int> deg(n_, 0);
    for (const auto& e : edges_)
        for (Vertex v : e) ++deg[v];
    return deg;
}

bool is_proper_two_coloring(const Hypergraph& h, const TwoColoring& c) {
    if (static_cast<Vertex>(c.size()) != h.size()) return false;
    for (const auto& e : h.edges()) {
        bool has0 = false, has1 = false;
        for (Vertex v : e) (c[v] == 0 ? has0 : has1) = true;
        if (!(has0 && has1)) return false;
    }
    return true;
}

namespace {

// DPLL-style search. Each hyperedge tracks how many of its vertices carry
// each color; an edge with all vertices but one assigned and monochromatic
// forces the last vertex to the other color.
class TwoColorSearch {
public:
    explicit TwoColorSearch(const Hypergraph& h) : h_(h), color_(h.size(), -1) {
        incident_.resize(h.size());
        count_.assign(h.edges().size(), {0, 0});
        for (std::size_t e = 0; e < h.edges().size(); ++e)
            for (Vertex v : h.edges()[e]) incident_[v].push_back(e);
    }

    std::optional<TwoColoring> run() {
        for (const auto& e : h_.edges())
            if (e.size() == 1) return std::nullopt;
        if (!solve(0)) return std::nullopt;
        TwoColoring out(color_.size());
        for (std::size_t v = 0; v < color_.size(); ++v) out[v] = std::max(color_[v], 0);
        return out;
    }

private:
    bool assign(Vertex v, int c) {
        color_[v] = c;
        trail_.push_back(v);
        bool ok = true;
        for (std::size_t e : incident_[v]) {
            ++count_[e][c];
            const auto size = static_cast<int>(h_.edges()[e].size());
            if (count_[e][c] == size) ok = false;
            else if (count_[e][c] == size - 1 && count_[e][1 - c] == 0)
                pending_.push_back(e);
        }
        return ok;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            Vertex v = trail_.back();
            trail_.pop_back();
            int c = color_[v];
            for (std::size_t e : incident_[v]) --count_[e][c];
            color_[v] = -1;
        }
    }

    bool propagate() {
        while (!pending_.empty()) {
            std::size_t e = pending_.back();
            pending_.pop_back();
            const auto& edge = h_.edges()[e];
            int c0 = count_[e][0], c1 = count_[e][1];
            int free = static_cast<int>(edge.size()) - c0 - c1;
            if (free == 0) {
                if (c0 == 0 || c1 == 0) return false;
                continue;
            }
            if (free != 1 || (c0 != 0 && c1 != 0)) continue;
            int forced = c0 == 0 ? 0 : 1;
            for (Vertex v : edge)
                if (color_[v] < 0) {
                    if (!assign(v, forced)) return false;
                    break;
                }
        }
        return true;
    }

    bool solve(Vertex next) {
        while (next < h_.size() && (color_[next] >= 0 || incident_[next].empty()))
            ++next;
        if (next == h_.size()) return true;
        for (int c = 0; c < 2; ++c) {
            const std::size_t mark = trail_.size();
            pending_.clear();
            if (assign(next, c) && propagate() && solve(next + 1)) return true;
            pending_.clear();
            undo_to(mark);
        }
        return false;
    }

    const Hypergraph& h_;
    std::vector<int> color_;
    std::vector<std::vector<std::size_t>> incident_;
    std::vector<std::array<int, 2>> count_;
    std::vector<Vertex> trail_;
    std::vector<std::size_t> pending_;
};

}  // namespace

std::optional<TwoColoring> two_color_hypergraph(const Hypergraph& h) {
    for (const auto& e : h.edges())
        if (e.empty()) throw InputError("empty hyperedge");
    return TwoColorSearch(h).run();
}

}  // namespace lidcolor
