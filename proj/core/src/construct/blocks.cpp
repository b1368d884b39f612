#include <algorithm>
#include <deque>
#include <stdexcept>

#include "lidcolor/construct.hpp"
#include "lidcolor/structure.hpp"

namespace lidcolor::construct {

namespace {

struct Placement {
    int block;
    Vertex entry;                 // cut vertex shared with the parent block, -1 at the root
    std::vector<Color> palette;   // k colors available inside the block
    std::vector<Color> reserved;  // h colors absent from the block, one per type
};

Coloring color_connected(const Graph& g, const BlockColorer& colorer) {
    const auto bd = blocks(g);
    if (bd.cut_vertices.empty()) return colorer(g);

    const auto& bl = bd.blocks;
    std::vector<Coloring> local;
    int k = 0;
    for (const auto& b : bl) {
        Coloring c = colorer(g.induced(b)).normalized();
        if (!is_lid_coloring(g.induced(b), c)) throw InputError("block colorer returned an invalid coloring");
        k = std::max(k, c.palette_size());
        local.push_back(std::move(c));
    }
    const Coloring types = greedy_coloring(g.induced(bd.cut_vertices));
    const int h = types.palette_size();
    std::vector<int> type_of(g.size(), -1);
    for (std::size_t i = 0; i < bd.cut_vertices.size(); ++i) type_of[bd.cut_vertices[i]] = types[static_cast<Vertex>(i)];

    std::vector<std::vector<int>> blocks_of(g.size());
    for (std::size_t b = 0; b < bl.size(); ++b)
        for (Vertex v : bl[b]) blocks_of[v].push_back(static_cast<int>(b));
    auto local_index = [&](int b, Vertex v) {
        return static_cast<Vertex>(std::lower_bound(bl[b].begin(), bl[b].end(), v) - bl[b].begin());
    };

    std::vector<Color> colors(g.size(), -1);
    std::vector<char> placed(bl.size(), 0);
    std::deque<Placement> queue;
    {
        Placement root{0, -1, {}, {}};
        for (Color c = 0; c < k; ++c) root.palette.push_back(c);
        for (int p = 0; p < h; ++p) root.reserved.push_back(k + p);
        queue.push_back(std::move(root));
        placed[0] = 1;
    }
    while (!queue.empty()) {
        Placement cur = std::move(queue.front());
        queue.pop_front();
        const auto& members = bl[cur.block];
        const Coloring& lc = local[cur.block];

        // Block colors -> palette colors; the entry vertex keeps its color and
        // its lowest neighbor inside the block takes the parent's reserved color.
        std::vector<Color> map(k, -1);
        std::vector<char> used(cur.palette.size(), 0);
        if (cur.entry >= 0) {
            const Vertex ui = local_index(cur.block, cur.entry);
            const Graph sub = g.induced(members);
            const Vertex wi = sub.neighbors(ui).front();
            map[lc[ui]] = colors[cur.entry];
            map[lc[wi]] = cur.palette.back();
            for (std::size_t i = 0; i < cur.palette.size(); ++i)
                if (cur.palette[i] == colors[cur.entry] || cur.palette[i] == cur.palette.back()) used[i] = 1;
        }
        for (Color c = 0, next = 0; c < k; ++c) {
            if (map[c] >= 0) continue;
            while (used[next]) ++next;
            map[c] = cur.palette[next];
            used[next] = 1;
        }
        for (std::size_t i = 0; i < members.size(); ++i) colors[members[i]] = map[lc[static_cast<Vertex>(i)]];

        for (Vertex u : members) {
            if (type_of[u] < 0) continue;
            for (int child : blocks_of[u]) {
                if (placed[child]) continue;
                placed[child] = 1;
                Vertex x = -1;
                for (Vertex w : g.neighbors(u))
                    if (std::binary_search(members.begin(), members.end(), w)) {
                        x = w;
                        break;
                    }
                Placement next{child, u, {}, cur.reserved};
                const Color shared = colors[x];
                for (Color c : cur.palette)
                    if (c != shared) next.palette.push_back(c);
                // The parent's reserved color for u's type goes last: it marks the
                // neighbor of u that must carry it.
                next.palette.push_back(cur.reserved[type_of[u]]);
                next.reserved[type_of[u]] = shared;
                queue.push_back(std::move(next));
            }
        }
    }
    return Coloring(std::move(colors));
}

}  // namespace

Coloring color_via_blocks(const Graph& g, const BlockColorer& block_colorer) {
    return color_components(g, [&](const Graph& comp) { return color_connected(comp, block_colorer); });
}

}  // namespace lidcolor::construct
