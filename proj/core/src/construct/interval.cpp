#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lidcolor/construct.hpp"

namespace lidcolor::construct {

namespace {

void check_intervals(const IntervalSet& intervals) {
    for (std::size_t i = 0; i < intervals.size(); ++i)
        if (intervals[i].a > intervals[i].b)
            throw InputError("interval " + std::to_string(i + 1) + " has a > b");
}

bool meets(const Interval& x, const Interval& y) { return std::max(x.a, y.a) <= std::min(x.b, y.b); }

// Moves left ends left and right ends right while the intersection graph is
// unchanged, until every overlap is witnessed by an endpoint in between.
void normalize(IntervalSet& iv) {
    const std::size_t n = iv.size();
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<long long> rights(n);
        for (std::size_t i = 0; i < n; ++i) rights[i] = iv[i].b;
        std::sort(rights.begin(), rights.end());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!(iv[i].a < iv[j].a) || !meets(iv[i], iv[j])) continue;
                auto it = std::lower_bound(rights.begin(), rights.end(), iv[i].a);
                if (it == rights.end() || *it >= iv[j].a) {
                    iv[j].a = iv[i].a;
                    changed = true;
                }
            }
        std::vector<long long> lefts(n);
        for (std::size_t i = 0; i < n; ++i) lefts[i] = iv[i].a;
        std::sort(lefts.begin(), lefts.end());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!(iv[j].b < iv[i].b) || !meets(iv[i], iv[j])) continue;
                auto it = std::upper_bound(lefts.begin(), lefts.end(), iv[j].b);
                if (it == lefts.end() || *it > iv[i].b) {
                    iv[j].b = iv[i].b;
                    changed = true;
                }
            }
    }
}

// Sweep over the normalized intervals of one connected component.
void sweep(const IntervalSet& iv, int k, std::vector<Color>& color_of) {
    const int n = static_cast<int>(iv.size());
    std::vector<long long> lefts;
    for (const auto& x : iv) lefts.push_back(x.a);
    std::sort(lefts.begin(), lefts.end());
    lefts.erase(std::unique(lefts.begin(), lefts.end()), lefts.end());

    auto starting_at = [&](long long t) {
        std::vector<int> out;
        for (int j = 0; j < n; ++j)
            if (iv[j].a == t) out.push_back(j);
        return out;
    };

    {
        Color next = 0;
        for (int j : starting_at(lefts[0])) color_of[j] = next++;
    }
    for (std::size_t i = 1; i < lefts.size(); ++i) {
        const long long t = lefts[i];
        const long long prev = lefts[i - 1];
        std::vector<int> active, ended;
        for (int j = 0; j < n; ++j) {
            if (iv[j].a < t && t <= iv[j].b) active.push_back(j);
            if (prev <= iv[j].b && iv[j].b < t) ended.push_back(j);
        }
        if (ended.empty()) throw std::logic_error("interval sweep: component is not connected");

        int anchor = -1;
        for (int j : ended) {
            const bool twin_start = std::any_of(active.begin(), active.end(), [&](int l) { return iv[l].a == iv[j].a; });
            if (twin_start && (anchor < 0 || iv[j].a < iv[anchor].a)) anchor = j;
        }
        if (anchor < 0) anchor = ended.front();
        const Color c0 = color_of[anchor];

        std::vector<char> residue_used(k, 0);
        for (int j : active) residue_used[color_of[j] % k] = 1;

        const auto batch = starting_at(t);
        int longest = batch.front();
        for (int j : batch)
            if (iv[j].b > iv[longest].b) longest = j;
        const Color shifted = (c0 + k) % (2 * k);
        if (residue_used[shifted % k]) throw std::logic_error("interval sweep: anchor color clash");
        color_of[longest] = shifted;
        residue_used[shifted % k] = 1;
        for (int j : batch) {
            if (j == longest) continue;
            int r = 0;
            while (r < k && residue_used[r]) ++r;
            if (r == k) throw std::logic_error("interval sweep: clique larger than omega");
            color_of[j] = r;
            residue_used[r] = 1;
        }
    }
}

}  // namespace

Graph interval_graph(const IntervalSet& intervals) {
    check_intervals(intervals);
    std::vector<Edge> edges;
    const auto n = static_cast<Vertex>(intervals.size());
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (meets(intervals[i], intervals[j])) edges.emplace_back(i, j);
    return Graph(n, edges);
}

int interval_clique_number(const IntervalSet& intervals) {
    check_intervals(intervals);
    // Closed intervals: at equal coordinates openings are processed first.
    std::vector<std::pair<long long, int>> events;
    for (const auto& x : intervals) {
        events.emplace_back(x.a, 0);
        events.emplace_back(x.b, 1);
    }
    std::sort(events.begin(), events.end());
    int depth = 0, best = 0;
    for (auto [pos, kind] : events) {
        depth += kind == 0 ? 1 : -1;
        best = std::max(best, depth);
    }
    return best;
}

Coloring color_interval(const IntervalSet& intervals) {
    const Graph g = interval_graph(intervals);
    if (g.empty()) return Coloring{};
    const int k = interval_clique_number(intervals);
    std::vector<Color> colors(g.size(), 0);
    for (const auto& comp : connected_components(g)) {
        IntervalSet part;
        for (Vertex v : comp) part.push_back(intervals[v]);
        normalize(part);
        std::vector<Color> local(comp.size(), -1);
        sweep(part, k, local);
        for (std::size_t i = 0; i < comp.size(); ++i) colors[comp[i]] = local[i];
    }
    return Coloring(std::move(colors));
}

}  // namespace lidcolor::construct
