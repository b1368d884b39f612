#include <algorithm>
#include <array>
#include <stdexcept>

#include "lidcolor/construct.hpp"
#include "lidcolor/structure.hpp"

namespace lidcolor::construct {

namespace {

// Colors 1..5; words give x2..x8.
constexpr std::array<PlanarTableEntry, 30> kTable{{
    {1, 2, 3, {2, 4, 3, 1, 2, 4, 3}}, {2, 1, 3, {2, 4, 3, 1, 5, 4, 3}}, {3, 1, 2, {2, 4, 3, 1, 5, 4, 2}},
    {4, 1, 2, {2, 5, 3, 4, 1, 5, 2}}, {5, 1, 2, {2, 4, 3, 5, 1, 4, 2}}, {1, 2, 4, {2, 4, 3, 1, 2, 5, 4}},
    {2, 1, 4, {2, 5, 4, 1, 3, 5, 4}}, {3, 1, 4, {2, 4, 3, 1, 2, 5, 4}}, {4, 1, 3, {2, 4, 3, 1, 2, 5, 3}},
    {5, 1, 3, {2, 4, 3, 1, 2, 4, 3}}, {1, 2, 5, {2, 4, 3, 1, 2, 4, 5}}, {2, 1, 5, {2, 4, 5, 1, 3, 4, 5}},
    {3, 1, 5, {2, 4, 3, 1, 2, 4, 5}}, {4, 1, 5, {2, 4, 5, 1, 2, 3, 5}}, {5, 1, 4, {2, 4, 3, 5, 1, 2, 4}},
    {1, 3, 4, {2, 4, 3, 1, 2, 5, 4}}, {2, 3, 4, {3, 5, 1, 2, 3, 5, 4}}, {3, 2, 4, {2, 4, 3, 1, 2, 5, 4}},
    {4, 2, 3, {2, 4, 3, 1, 2, 5, 3}}, {5, 2, 3, {2, 4, 3, 1, 2, 4, 3}}, {1, 3, 5, {2, 4, 3, 1, 2, 4, 5}},
    {2, 3, 5, {3, 4, 1, 2, 3, 4, 5}}, {3, 2, 5, {2, 4, 3, 1, 2, 4, 5}}, {4, 2, 5, {2, 4, 5, 1, 2, 3, 5}},
    {5, 2, 4, {2, 4, 3, 5, 2, 1, 4}}, {1, 4, 5, {2, 5, 3, 1, 4, 2, 5}}, {2, 4, 5, {3, 5, 2, 1, 4, 3, 5}},
    {3, 4, 5, {2, 5, 3, 1, 4, 2, 5}}, {4, 3, 5, {2, 5, 3, 4, 1, 2, 5}}, {5, 3, 4, {2, 4, 3, 5, 1, 2, 4}},
}};

constexpr int kColors = 5;

struct Step {
    enum Kind { isolated, pendant, cycle, path } kind;
    std::vector<Vertex> vs;
};

class GirthColorer {
public:
    explicit GirthColorer(const Graph& g) : g_(g), alive_(g.size(), 1), deg_(g.size()), colors_(g.size(), -1) {
        for (Vertex v = 0; v < g.size(); ++v) deg_[v] = static_cast<int>(g.degree(v));
    }

    Coloring run() {
        reduce();
        for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) replay(*it);
        return Coloring(colors_);
    }

private:
    // ---- reduction ----

    void remove(Vertex v) {
        alive_[v] = 0;
        for (Vertex w : g_.neighbors(v))
            if (alive_[w]) --deg_[w];
    }

    void reduce() {
        Vertex remaining = g_.size();
        while (remaining > 0) {
            Step step = next_step();
            if (step.kind == Step::isolated || step.kind == Step::cycle) {
                for (Vertex v : step.vs) remove(v);
                remaining -= static_cast<Vertex>(step.vs.size());
            } else if (step.kind == Step::pendant) {
                remove(step.vs[0]);
                --remaining;
            } else {
                for (std::size_t i = 1; i + 1 < step.vs.size(); ++i) remove(step.vs[i]);
                remaining -= 7;
            }
            steps_.push_back(std::move(step));
        }
    }

    Vertex other_neighbor(Vertex v, Vertex not_this) const {
        for (Vertex w : g_.neighbors(v))
            if (alive_[w] && w != not_this) return w;
        return -1;
    }

    Step next_step() const {
        const Vertex n = g_.size();
        for (Vertex v = 0; v < n; ++v)
            if (alive_[v] && deg_[v] == 0) return {Step::isolated, {v}};
        for (Vertex v = 0; v < n; ++v)
            if (alive_[v] && deg_[v] == 1) return {Step::pendant, {v, other_neighbor(v, -1)}};
        if (auto c = find_cycle_component()) return {Step::cycle, std::move(*c)};
        if (auto p = find_path()) return {Step::path, std::move(*p)};
        throw InputError("no reducible structure found; the graph is probably not planar");
    }

    std::optional<std::vector<Vertex>> find_cycle_component() const {
        std::vector<char> seen(g_.size(), 0);
        for (Vertex s = 0; s < g_.size(); ++s) {
            if (!alive_[s] || seen[s]) continue;
            std::vector<Vertex> comp{s};
            seen[s] = 1;
            bool all_two = true;
            for (std::size_t head = 0; head < comp.size(); ++head) {
                const Vertex x = comp[head];
                if (deg_[x] != 2) all_two = false;
                for (Vertex y : g_.neighbors(x))
                    if (alive_[y] && !seen[y]) {
                        seen[y] = 1;
                        comp.push_back(y);
                    }
            }
            if (!all_two) continue;
            // Walk from the lowest id toward its smaller neighbor.
            std::vector<Vertex> order{s};
            Vertex prev = s, cur = other_neighbor(s, -1);
            while (cur != s) {
                order.push_back(cur);
                const Vertex nxt = other_neighbor(cur, prev);
                prev = cur;
                cur = nxt;
            }
            return order;
        }
        return std::nullopt;
    }

    std::optional<std::vector<Vertex>> find_path() const {
        for (Vertex x1 = 0; x1 < g_.size(); ++x1) {
            if (!alive_[x1] || deg_[x1] < 3) continue;
            for (Vertex y : g_.neighbors(x1)) {
                if (!alive_[y]) continue;
                std::vector<Vertex> path{x1};
                Vertex prev = x1, cur = y;
                while (path.size() < 8 && deg_[cur] == 2) {
                    path.push_back(cur);
                    const Vertex nxt = other_neighbor(cur, prev);
                    prev = cur;
                    cur = nxt;
                }
                if (path.size() == 8) {
                    path.push_back(cur);
                    return path;
                }
            }
        }
        return std::nullopt;
    }

    // ---- extension ----

    std::vector<Vertex> alive_neighbors(Vertex v) const {
        std::vector<Vertex> out;
        for (Vertex w : g_.neighbors(v))
            if (alive_[w]) out.push_back(w);
        return out;
    }

    std::vector<Color> closed_colors(Vertex v) const {
        std::vector<Color> out{colors_[v]};
        for (Vertex w : alive_neighbors(v)) out.push_back(colors_[w]);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    static Color smallest_missing(const std::vector<Color>& used) {
        Color c = 0;
        while (std::find(used.begin(), used.end(), c) != used.end()) ++c;
        return c;
    }

    void replay(const Step& step) {
        switch (step.kind) {
            case Step::isolated:
                alive_[step.vs[0]] = 1;
                colors_[step.vs[0]] = 0;
                break;
            case Step::cycle: replay_cycle(step.vs); break;
            case Step::pendant: replay_pendant(step.vs[0], step.vs[1]); break;
            case Step::path: replay_path(step.vs); break;
        }
    }

    void replay_cycle(const std::vector<Vertex>& cycle) {
        const int n = static_cast<int>(cycle.size());
        const int fives = n % 4;
        const int fours = (n - 5 * fives) / 4;
        std::size_t i = 0;
        for (int b = 0; b < fours; ++b)
            for (int c = 0; c < 4; ++c) colors_[cycle[i++]] = c;
        for (int b = 0; b < fives; ++b)
            for (int c = 0; c < 5; ++c) colors_[cycle[i++]] = c;
        for (Vertex v : cycle) alive_[v] = 1;
    }

    void replay_pendant(Vertex u, Vertex v) {
        const auto nbrs = alive_neighbors(v);
        if (nbrs.size() >= 2) {
            const auto seen = closed_colors(v);
            colors_[u] = *std::find_if(seen.begin(), seen.end(), [&](Color c) { return c != colors_[v]; });
        } else if (nbrs.size() == 1) {
            colors_[u] = smallest_missing(closed_colors(nbrs[0]));
        } else {
            colors_[u] = colors_[v] == 0 ? 1 : 0;
        }
        alive_[u] = 1;
    }

    // Checks niceness and the identifying condition around the rebuilt path.
    bool locally_nice(const std::vector<Vertex>& path) const {
        for (Vertex v : path) {
            const auto nv = alive_neighbors(v);
            const auto cv = closed_colors(v);
            if (nv.size() >= 2 && cv.size() != 3) return false;
            for (Vertex w : nv) {
                if (colors_[w] == colors_[v]) return false;
                if (closed_colors(w) != cv) continue;
                auto a = nv, b = alive_neighbors(w);
                a.push_back(v);
                b.push_back(w);
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                if (a != b) return false;
            }
        }
        return true;
    }

    bool apply_word(const std::vector<Vertex>& path, const PlanarTableEntry& row, const std::array<Color, kColors>& inverse) {
        for (int i = 0; i < 7; ++i) colors_[path[i + 1]] = inverse[row.word[i] - 1];
        return locally_nice(path);
    }

    static const PlanarTableEntry* lookup(int a, int b1, int b2) {
        for (const auto& row : kTable)
            if (row.a == a && row.b1 == b1 && row.b2 == b2) return &row;
        return nullptr;
    }

    void replay_path(const std::vector<Vertex>& path) {
        const Vertex x1 = path[0], x9 = path[8];
        const auto around_x1 = closed_colors(x1);
        if (around_x1.size() != 3) throw std::logic_error("planar extension: x1 does not see three colors");
        std::vector<Color> inner, outer;
        for (Color c : around_x1)
            if (c != colors_[x1]) inner.push_back(c);
        for (Color c = 0; c < kColors; ++c)
            if (std::find(around_x1.begin(), around_x1.end(), c) == around_x1.end()) outer.push_back(c);

        // The four relabelings with x1 -> 1 and N[x1] -> {1,2,3}; perm maps an
        // actual color to its table name (1-based), inverse goes back.
        std::vector<std::pair<std::array<int, kColors>, std::array<Color, kColors>>> relabelings;
        for (int s = 0; s < 2; ++s)
            for (int t = 0; t < 2; ++t) {
                std::array<int, kColors> perm{};
                std::array<Color, kColors> inverse{};
                const std::array<Color, kColors> order{colors_[x1], inner[s], inner[1 - s], outer[t], outer[1 - t]};
                for (int i = 0; i < kColors; ++i) {
                    perm[order[i]] = i + 1;
                    inverse[i] = order[i];
                }
                relabelings.emplace_back(perm, inverse);
            }

        // x2..x8 are still absent here, so these are neighborhoods in G'.
        const auto x9_nbrs = alive_neighbors(x9);
        std::vector<std::pair<const PlanarTableEntry*, std::size_t>> options;
        if (x9_nbrs.size() >= 2) {
            std::vector<Color> open;
            for (Vertex w : x9_nbrs) open.push_back(colors_[w]);
            std::sort(open.begin(), open.end());
            open.erase(std::unique(open.begin(), open.end()), open.end());
            if (open.size() == 2)
                for (std::size_t r = 0; r < relabelings.size(); ++r) {
                    const auto& perm = relabelings[r].first;
                    int b1 = perm[open[0]], b2 = perm[open[1]];
                    if (b1 > b2) std::swap(b1, b2);
                    if (auto row = lookup(perm[colors_[x9]], b1, b2)) options.emplace_back(row, r);
                }
        } else if (x9_nbrs.size() == 1) {
            const Vertex x10 = x9_nbrs[0];
            const auto around_x10 = closed_colors(x10);
            for (std::size_t r = 0; r < relabelings.size(); ++r) {
                const auto& perm = relabelings[r].first;
                const int b1 = perm[colors_[x10]];
                for (int b2 = 1; b2 <= kColors; ++b2) {
                    const bool outside = std::none_of(around_x10.begin(), around_x10.end(),
                                                      [&](Color c) { return perm[c] == b2; });
                    if (outside && b1 < b2)
                        if (auto row = lookup(perm[colors_[x9]], b1, b2)) options.emplace_back(row, r);
                }
            }
        }
        for (std::size_t i = 1; i < 8; ++i) alive_[path[i]] = 1;

        for (const auto& [row, r] : options)
            if (apply_word(path, *row, relabelings[r].second)) return;
        if (!exhaustive(path)) throw std::logic_error("planar extension: no valid coloring of the path");
    }

    bool exhaustive(const std::vector<Vertex>& path) {
        std::array<Color, 7> word{};
        for (long code = 0; code < 78125; ++code) {
            long rest = code;
            for (int i = 0; i < 7; ++i) {
                word[i] = static_cast<Color>(rest % kColors);
                rest /= kColors;
            }
            for (int i = 0; i < 7; ++i) colors_[path[i + 1]] = word[i];
            if (locally_nice(path)) return true;
        }
        return false;
    }

    const Graph& g_;
    std::vector<char> alive_;
    std::vector<int> deg_;
    std::vector<Color> colors_;
    std::vector<Step> steps_;
};

}  // namespace

std::span<const PlanarTableEntry> planar_extension_table() { return kTable; }

Coloring color_planar_girth36(const Graph& g) {
    if (auto len = girth(g); len && *len < 36) throw InputError("girth is below 36");
    return GirthColorer(g).run();
}

}  // namespace lidcolor::construct
