#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "lidcolor/construct.hpp"
#include "lidcolor/structure.hpp"

namespace lidcolor::construct {

namespace {

using Family = std::vector<std::vector<int>>;

std::vector<int> trace(const std::vector<int>& set, const std::vector<int>& chosen) {
    std::vector<int> out;
    std::set_intersection(set.begin(), set.end(), chosen.begin(), chosen.end(), std::back_inserter(out));
    return out;
}

bool discriminates(const Family& family, std::vector<int> chosen) {
    std::sort(chosen.begin(), chosen.end());
    std::vector<std::vector<int>> traces;
    traces.reserve(family.size());
    for (const auto& s : family) traces.push_back(trace(s, chosen));
    std::sort(traces.begin(), traces.end());
    return std::adjacent_find(traces.begin(), traces.end()) == traces.end();
}

// Minimum-size search over distinct membership columns; nullopt when too wide.
std::optional<std::vector<int>> smallest_discriminator(const Family& family, std::size_t upper) {
    std::map<std::vector<char>, int> columns;
    std::vector<int> ground;
    for (const auto& s : family) ground.insert(ground.end(), s.begin(), s.end());
    std::sort(ground.begin(), ground.end());
    ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
    for (int x : ground) {
        std::vector<char> col;
        for (const auto& s : family) col.push_back(std::binary_search(s.begin(), s.end(), x) ? 1 : 0);
        columns.emplace(col, x);  // keeps the smallest element per pattern
    }
    std::vector<int> useful;
    for (const auto& [col, x] : columns) useful.push_back(x);
    std::sort(useful.begin(), useful.end());
    if (useful.size() > 20) return std::nullopt;
    const int width = static_cast<int>(useful.size());
    for (std::size_t size = 0; size < upper; ++size) {
        std::vector<int> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::vector<int> chosen;
            for (int i : pick) chosen.push_back(useful[i]);
            if (discriminates(family, chosen)) return chosen;
            int i = static_cast<int>(size) - 1;
            while (i >= 0 && pick[i] == width - static_cast<int>(size) + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < static_cast<int>(size); ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<int> discriminating_subset(const std::vector<std::vector<int>>& sets) {
    Family family;
    for (auto s : sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (std::find(family.begin(), family.end(), s) == family.end()) family.push_back(std::move(s));
    }
    if (family.size() <= 1) return {};

    // Greedy: each added element splits at least one colliding pair, so at
    // most |family| - 1 elements are added.
    std::vector<int> chosen;
    while (true) {
        std::vector<int> sorted = chosen;
        std::sort(sorted.begin(), sorted.end());
        std::optional<std::pair<std::size_t, std::size_t>> clash;
        for (std::size_t i = 0; i < family.size() && !clash; ++i)
            for (std::size_t j = i + 1; j < family.size() && !clash; ++j)
                if (trace(family[i], sorted) == trace(family[j], sorted)) clash = std::pair{i, j};
        if (!clash) break;
        std::vector<int> diff;
        const auto& x = family[clash->first];
        const auto& y = family[clash->second];
        std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(diff));
        chosen.push_back(diff.front());
    }
    std::sort(chosen.begin(), chosen.end());
    for (std::size_t i = 0; i < chosen.size();) {
        std::vector<int> without = chosen;
        without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
        if (discriminates(family, without)) chosen = std::move(without);
        else ++i;
    }
    if (family.size() <= 10)
        if (auto best = smallest_discriminator(family, chosen.size())) return *best;
    return chosen;
}

std::optional<SplitPartition> split_partition(const Graph& g) {
    const Vertex n = g.size();
    std::vector<Vertex> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex x, Vertex y) { return g.degree(x) > g.degree(y); });
    // Hammer-Simeone degree sequence test.
    std::size_t m = 0;
    for (std::size_t i = 0; i < by_degree.size(); ++i)
        if (g.degree(by_degree[i]) >= i) m = i + 1;
    long long head = 0, tail = 0;
    for (std::size_t i = 0; i < by_degree.size(); ++i)
        (i < m ? head : tail) += static_cast<long long>(g.degree(by_degree[i]));
    if (head != static_cast<long long>(m) * static_cast<long long>(m - (m > 0 ? 1 : 0)) + tail) return std::nullopt;

    SplitPartition out;
    out.clique.assign(by_degree.begin(), by_degree.begin() + static_cast<std::ptrdiff_t>(m));
    out.independent.assign(by_degree.begin() + static_cast<std::ptrdiff_t>(m), by_degree.end());
    std::sort(out.clique.begin(), out.clique.end());
    std::sort(out.independent.begin(), out.independent.end());
    for (std::size_t i = 0; i < out.clique.size(); ++i)
        for (std::size_t j = i + 1; j < out.clique.size(); ++j)
            if (!g.adjacent(out.clique[i], out.clique[j])) throw std::logic_error("split partition: clique side broken");
    for (std::size_t i = 0; i < out.independent.size(); ++i)
        for (std::size_t j = i + 1; j < out.independent.size(); ++j)
            if (g.adjacent(out.independent[i], out.independent[j]))
                throw std::logic_error("split partition: independent side broken");
    return out;
}

Coloring color_split(const Graph& g) {
    auto part = split_partition(g);
    if (!part) throw InputError("not a split graph");
    const auto& clique = part->clique;
    const auto& indep = part->independent;
    const int k = static_cast<int>(clique.size());
    if (k <= 1) return Coloring(std::vector<Color>(g.size(), 0));
    if (k == 2) return color_tree(g);

    std::vector<Color> colors(g.size(), -1);
    std::vector<char> in_s(g.size(), 0);
    for (Vertex v : indep) in_s[v] = 1;
    auto s_trace = [&](Vertex v) {
        std::vector<int> out;
        for (Vertex w : g.neighbors(v))
            if (in_s[w]) out.push_back(w);
        return out;
    };
    auto color_rest_by_non_neighbor = [&] {
        for (Vertex s : indep) {
            if (colors[s] >= 0) continue;
            auto it = std::find_if(clique.begin(), clique.end(), [&](Vertex v) { return !g.adjacent(s, v); });
            colors[s] = colors[*it];
        }
    };

    std::vector<std::vector<int>> traces;
    for (Vertex v : clique) traces.push_back(s_trace(v));
    const auto s1 = discriminating_subset(traces);

    if (static_cast<int>(indep.size()) <= k - 1 || static_cast<int>(s1.size()) <= k - 2) {
        const std::vector<int> chosen = static_cast<int>(indep.size()) <= k - 1 ? std::vector<int>(indep.begin(), indep.end()) : s1;
        for (int i = 0; i < k; ++i) colors[clique[i]] = i;
        Color next = k;
        for (int s : chosen) colors[s] = next++;
        for (Vertex s : indep)
            if (colors[s] < 0) colors[s] = next;
        return Coloring(std::move(colors));
    }

    std::vector<char> in_s1(g.size(), 0);
    for (int s : s1) in_s1[s] = 1;
    auto touches_s1 = [&](Vertex v) {
        const auto nbrs = g.neighbors(v);
        return std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return in_s1[w]; });
    };

    // Case 1 needs x outside S1 of degree k-1 with a neighbor seeing nothing of S1.
    Vertex x = -1, lonely = -1;
    for (Vertex s : indep) {
        if (in_s1[s] || static_cast<int>(g.degree(s)) != k - 1) continue;
        for (Vertex v : g.neighbors(s))
            if (!touches_s1(v)) {
                lonely = v;
                break;
            }
        if (lonely >= 0) {
            x = s;
            break;
        }
    }

    if (x < 0) {
        for (int i = 0; i < k; ++i) colors[clique[i]] = i;
        Color next = k;
        for (int s : s1) colors[s] = next++;
        color_rest_by_non_neighbor();
        return Coloring(std::move(colors));
    }

    const Vertex missed = *std::find_if(clique.begin(), clique.end(), [&](Vertex v) { return !g.adjacent(x, v); });
    std::vector<Vertex> k1;
    for (Vertex v : clique)
        if (v != lonely && v != missed) k1.push_back(v);
    for (std::size_t i = 0; i < k1.size(); ++i) colors[k1[i]] = static_cast<Color>(i);
    colors[lonely] = k - 2;
    colors[missed] = k - 1;

    std::vector<std::vector<int>> k1_traces;
    for (Vertex v : k1) k1_traces.push_back(trace(s_trace(v), s1));
    const auto s2 = discriminating_subset(k1_traces);
    Color next = k;
    for (int s : s2) colors[s] = next++;
    for (int s : s1)
        if (colors[s] < 0) colors[s] = 2 * k - 3;
    const auto x_nbrs = g.neighbors(x);
    for (Vertex s : indep) {
        if (colors[s] >= 0) continue;
        const auto nb = g.neighbors(s);
        if (std::equal(nb.begin(), nb.end(), x_nbrs.begin(), x_nbrs.end())) colors[s] = 2 * k - 2;
    }
    color_rest_by_non_neighbor();
    return Coloring(std::move(colors));
}

}  // namespace lidcolor::construct
