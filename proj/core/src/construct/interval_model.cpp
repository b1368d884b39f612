#include <algorithm>
#include <utility>

#include "lidcolor/construct.hpp"

namespace lidcolor::construct {

namespace {

// Maximum cardinality search; the reverse visit order is a perfect
// elimination order exactly when the graph is chordal.
std::vector<Vertex> mcs_order(const Graph& g) {
    const Vertex n = g.size();
    std::vector<int> weight(n, 0);
    std::vector<char> seen(n, 0);
    std::vector<Vertex> order;
    for (Vertex step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!seen[v] && (best < 0 || weight[v] > weight[best])) best = v;
        seen[best] = 1;
        order.push_back(best);
        for (Vertex w : g.neighbors(best))
            if (!seen[w]) ++weight[w];
    }
    std::reverse(order.begin(), order.end());
    return order;
}

std::optional<std::vector<std::vector<Vertex>>> maximal_cliques(const Graph& g) {
    const auto peo = mcs_order(g);
    std::vector<int> pos(g.size());
    for (std::size_t i = 0; i < peo.size(); ++i) pos[peo[i]] = static_cast<int>(i);
    std::vector<std::vector<Vertex>> cliques;
    for (Vertex v : peo) {
        std::vector<Vertex> c{v};
        for (Vertex w : g.neighbors(v))
            if (pos[w] > pos[v]) c.push_back(w);
        for (std::size_t i = 1; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                if (!g.adjacent(c[i], c[j])) return std::nullopt;
        std::sort(c.begin(), c.end());
        cliques.push_back(std::move(c));
    }
    std::sort(cliques.begin(), cliques.end(), [](const auto& x, const auto& y) {
        return x.size() != y.size() ? x.size() > y.size() : x < y;
    });
    std::vector<std::vector<Vertex>> out;
    for (auto& c : cliques) {
        const bool covered = std::any_of(out.begin(), out.end(), [&](const auto& big) {
            return std::includes(big.begin(), big.end(), c.begin(), c.end());
        });
        if (!covered) out.push_back(std::move(c));
    }
    return out;
}

// Orders the cliques so that each vertex lies in a contiguous run.
class CliquePath {
public:
    CliquePath(Vertex n, const std::vector<std::vector<Vertex>>& cliques)
        : cliques_(cliques), member_of_(n), state_(n, 0), used_(cliques.size(), 0) {
        for (std::size_t q = 0; q < cliques.size(); ++q)
            for (Vertex v : cliques[q]) member_of_[v].push_back(static_cast<int>(q));
    }

    std::optional<std::vector<int>> solve() {
        if (extend()) return order_;
        return std::nullopt;
    }

private:
    // state: 0 unseen, 1 in the last placed clique, 2 closed for good
    bool extend() {
        if (order_.size() == cliques_.size()) return true;
        if (++steps_ > kBudget) return false;
        for (std::size_t q = 0; q < cliques_.size(); ++q) {
            if (used_[q]) continue;
            const auto& c = cliques_[q];
            if (std::any_of(c.begin(), c.end(), [&](Vertex v) { return state_[v] == 2; })) continue;
            // In a connected graph consecutive cliques of the path overlap.
            if (!order_.empty() && std::none_of(c.begin(), c.end(), [&](Vertex v) { return state_[v] == 1; }))
                continue;
            std::vector<std::pair<Vertex, int>> undo;
            bool dead = false;
            if (!order_.empty())
                for (Vertex v : cliques_[order_.back()]) {
                    if (std::binary_search(c.begin(), c.end(), v)) continue;
                    undo.emplace_back(v, std::exchange(state_[v], 2));
                    for (int other : member_of_[v])
                        if (!used_[other] && other != static_cast<int>(q)) dead = true;
                }
            for (Vertex v : c) undo.emplace_back(v, std::exchange(state_[v], 1));
            used_[q] = 1;
            order_.push_back(static_cast<int>(q));
            if (!dead && extend()) return true;
            order_.pop_back();
            used_[q] = 0;
            for (auto it = undo.rbegin(); it != undo.rend(); ++it) state_[it->first] = it->second;
        }
        return false;
    }

    static constexpr long long kBudget = 2'000'000;
    const std::vector<std::vector<Vertex>>& cliques_;
    std::vector<std::vector<int>> member_of_;
    std::vector<int> state_;
    std::vector<char> used_;
    std::vector<int> order_;
    long long steps_ = 0;
};

}  // namespace

std::optional<IntervalSet> interval_model(const Graph& g) {
    IntervalSet out(g.size());
    long long offset = 0;
    for (const auto& comp : connected_components(g)) {
        const Graph sub = g.induced(comp);
        auto cliques = maximal_cliques(sub);
        if (!cliques) return std::nullopt;
        auto order = CliquePath(sub.size(), *cliques).solve();
        if (!order) return std::nullopt;
        std::vector<long long> first(sub.size(), -1), last(sub.size(), -1);
        for (std::size_t i = 0; i < order->size(); ++i)
            for (Vertex v : (*cliques)[(*order)[i]]) {
                if (first[v] < 0) first[v] = static_cast<long long>(i);
                last[v] = static_cast<long long>(i);
            }
        for (std::size_t i = 0; i < comp.size(); ++i) out[comp[i]] = {offset + first[i] + 1, offset + last[i] + 1};
        offset += static_cast<long long>(order->size()) + 1;
    }
    return out;
}

}  // namespace lidcolor::construct
