#include <algorithm>
#include <numeric>

#include "lidcolor/construct.hpp"

namespace lidcolor::construct {

namespace {

class CotreeBuilder {
public:
    explicit CotreeBuilder(const Graph& g) : g_(g) {}

    std::optional<Cotree> build() {
        Cotree tree;
        tree.vertex_count = g_.size();
        if (g_.size() == 0) return tree;
        std::vector<Vertex> all(g_.size());
        std::iota(all.begin(), all.end(), 0);
        nodes_ = &tree.nodes;
        tree.root = decompose(all);
        if (tree.root < 0) return std::nullopt;
        return tree;
    }

private:
    // Returns the node index, or -1 when the induced subgraph is prime.
    int decompose(const std::vector<Vertex>& vs) {
        if (vs.size() == 1) return add({CotreeKind::leaf, vs[0], {}});
        const Graph sub = g_.induced(vs);
        auto parts = connected_components(sub);
        CotreeKind kind = CotreeKind::disjoint_union;
        if (parts.size() == 1) {
            parts = connected_components(sub.complement());
            kind = CotreeKind::join;
            if (parts.size() == 1) return -1;
        }
        CotreeNode node{kind, -1, {}};
        for (const auto& part : parts) {
            std::vector<Vertex> ids;
            for (Vertex v : part) ids.push_back(vs[v]);
            const int child = decompose(ids);
            if (child < 0) return -1;
            node.children.push_back(child);
        }
        return add(std::move(node));
    }

    int add(CotreeNode node) {
        nodes_->push_back(std::move(node));
        return static_cast<int>(nodes_->size()) - 1;
    }

    const Graph& g_;
    std::vector<CotreeNode>* nodes_ = nullptr;
};

void collect(const Cotree& t, int node, std::vector<Vertex>& out) {
    const auto& nd = t.nodes[node];
    if (nd.kind == CotreeKind::leaf) out.push_back(nd.vertex);
    for (int c : nd.children) collect(t, c, out);
}

Vertex smallest_vertex(const Cotree& t, int node) {
    std::vector<Vertex> vs;
    collect(t, node, vs);
    return *std::min_element(vs.begin(), vs.end());
}

// Colors the subtree rooted at `node` with colors 0..palette-1 (all used)
// and returns the palette size.
int paint(const Cotree& t, int node, bool strong, std::vector<Color>& colors) {
    const auto& nd = t.nodes[node];
    if (nd.kind == CotreeKind::leaf) {
        colors[nd.vertex] = 0;
        return 1;
    }
    if (nd.kind == CotreeKind::join) {
        // Single vertices first: only the first part may be non-strong.
        std::vector<int> kids = nd.children;
        std::stable_sort(kids.begin(), kids.end(), [&](int x, int y) {
            const bool lx = t.nodes[x].kind == CotreeKind::leaf, ly = t.nodes[y].kind == CotreeKind::leaf;
            if (lx != ly) return lx;
            return smallest_vertex(t, x) < smallest_vertex(t, y);
        });
        int offset = 0;
        for (std::size_t i = 0; i < kids.size(); ++i) {
            std::vector<Vertex> vs;
            collect(t, kids[i], vs);
            const int p = paint(t, kids[i], strong || i > 0, colors);
            for (Vertex v : vs) colors[v] += offset;
            offset += p;
        }
        return offset;
    }
    std::vector<int> palettes;
    for (int c : nd.children) palettes.push_back(paint(t, c, false, colors));
    const auto widest = std::max_element(palettes.begin(), palettes.end());
    const int p = *widest;
    if (!strong) return p;
    std::vector<Vertex> vs;
    collect(t, nd.children[static_cast<std::size_t>(widest - palettes.begin())], vs);
    for (Vertex v : vs)
        if (colors[v] == 0) colors[v] = p;
    return p + 1;
}

}  // namespace

std::optional<Cotree> build_cotree(const Graph& g) { return CotreeBuilder(g).build(); }

Graph Cotree::to_graph() const {
    std::vector<Edge> edges;
    for (const auto& nd : nodes) {
        if (nd.kind != CotreeKind::join) continue;
        std::vector<std::vector<Vertex>> parts;
        for (int c : nd.children) {
            parts.emplace_back();
            collect(*this, c, parts.back());
        }
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                for (Vertex u : parts[i])
                    for (Vertex v : parts[j]) edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return Graph(vertex_count, edges);
}

int Cotree::clique_number() const {
    if (root < 0) return 0;
    auto omega = [&](auto&& self, int node) -> int {
        const auto& nd = nodes[node];
        if (nd.kind == CotreeKind::leaf) return 1;
        int acc = 0;
        for (int c : nd.children) {
            const int w = self(self, c);
            acc = nd.kind == CotreeKind::join ? acc + w : std::max(acc, w);
        }
        return acc;
    };
    return omega(omega, root);
}

Coloring color_cograph(const Cotree& tree, bool strong) {
    std::vector<Color> colors(tree.vertex_count, 0);
    if (tree.root >= 0) paint(tree, tree.root, strong, colors);
    return Coloring(std::move(colors));
}

}  // namespace lidcolor::construct
