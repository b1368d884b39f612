#include <string>

#include "lidcolor/gen.hpp"
#include "lidcolor/structure.hpp"

namespace lidcolor::gen {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw InputError(what);
}

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

void add_clique(std::vector<Edge>& edges, const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) edges.emplace_back(vs[i], vs[j]);
}

}  // namespace

Graph path(Vertex n) {
    require(n >= 1, "path needs at least one vertex");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph cycle(Vertex n) {
    require(n >= 3, "cycle needs at least three vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph complete(Vertex n) {
    require(n >= 1, "complete graph needs at least one vertex");
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    std::vector<Edge> edges;
    add_clique(edges, all);
    return Graph(n, edges);
}

Graph complete_bipartite(Vertex a, Vertex b) {
    require(a >= 1 && b >= 1, "complete bipartite graph needs two nonempty sides");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph(a + b, edges);
}

Graph star(Vertex leaves) {
    require(leaves >= 1, "star needs at least one leaf");
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, edges);
}

Graph hypercube(int d) {
    require(d >= 1 && d <= 20, "hypercube dimension must be in 1..20");
    const Vertex n = Vertex{1} << d;
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b)
            if (const Vertex w = v ^ (Vertex{1} << b); v < w) edges.emplace_back(v, w);
    return Graph(n, edges);
}

Graph grid(Vertex rows, Vertex cols) {
    require(rows >= 1 && cols >= 1, "grid needs positive dimensions");
    return cartesian_product(path(rows), path(cols));
}

Graph gen_path_power(Vertex l, int k) {
    require(l >= 1 && k >= 1, "path power needs l >= 1 and k >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < l; ++i)
        for (Vertex j = i + 1; j < l && j - i <= k; ++j) edges.emplace_back(i, j);
    return Graph(l, edges);
}

Graph gen_subdivided_clique(Vertex n) {
    require(n >= 2, "subdivided clique needs n >= 2");
    std::vector<Edge> edges;
    Vertex next = n;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) {
            edges.emplace_back(i, next);
            edges.emplace_back(next, next + 1);
            edges.emplace_back(next + 1, j);
            next += 2;
        }
    return Graph(next, edges);
}

Graph gen_pendant_clique(Vertex k) {
    require(k >= 1, "pendant clique needs k >= 1");
    std::vector<Vertex> clique(k);
    for (Vertex v = 0; v < k; ++v) clique[v] = v;
    std::vector<Edge> edges;
    add_clique(edges, clique);
    for (Vertex v = 0; v < k; ++v) edges.emplace_back(v, k + v);
    return Graph(2 * k, edges);
}

Graph gen_cograph_tight(Vertex k) {
    require(k >= 2, "tight cograph needs k >= 2");
    std::vector<Vertex> clique(k);
    for (Vertex v = 0; v < k; ++v) clique[v] = v;
    std::vector<Edge> edges;
    add_clique(edges, clique);
    // u_i for i = 2..k sees v_i..v_k, i.e. ids i-1..k-1.
    for (Vertex i = 2; i <= k; ++i)
        for (Vertex v = i - 1; v < k; ++v) edges.emplace_back(k + i - 2, v);
    return Graph(2 * k - 1, edges);
}

Graph gen_perfect_counterexample(Vertex k) {
    require(k >= 2, "perfect-graph counterexample needs k >= 2");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < k; ++i)
        for (Vertex j = 0; j < k; ++j) {
            edges.emplace_back(i, k + j);
            if (i == j)
                edges.emplace_back(i, 2 * k + j);
            else
                edges.emplace_back(k + i, 2 * k + j);
        }
    return Graph(3 * k, edges);
}

Graph gen_gadget_clique_pendant(Vertex n_plus_1) {
    require(n_plus_1 >= 2, "gadget needs at least two clique vertices");
    return gen_pendant_clique(n_plus_1);
}

std::vector<std::array<int, 3>> projective_points(int q) {
    if (!is_prime(q)) throw InputError("projective plane order must be prime, got " + std::to_string(q));
    std::vector<std::array<int, 3>> pts;
    pts.push_back({0, 0, 1});
    for (int z = 0; z < q; ++z) pts.push_back({0, 1, z});
    for (int y = 0; y < q; ++y)
        for (int z = 0; z < q; ++z) pts.push_back({1, y, z});
    return pts;
}

Graph gen_projective_graph(int q) {
    const auto pts = projective_points(q);
    const auto points = static_cast<Vertex>(pts.size());
    std::vector<Edge> edges;
    Vertex next = points;
    for (const auto& line : pts) {
        std::vector<Vertex> gadget;
        for (Vertex p = 0; p < points; ++p) {
            const int dot = pts[p][0] * line[0] + pts[p][1] * line[1] + pts[p][2] * line[2];
            if (dot % q != 0) continue;
            edges.emplace_back(next, p);
            gadget.push_back(next++);
        }
        add_clique(edges, gadget);
    }
    return Graph(next, edges);
}

}  // namespace lidcolor::gen
