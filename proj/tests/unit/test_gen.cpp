#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "lidcolor/exact.hpp"
#include "lidcolor/gen.hpp"
#include "lidcolor/structure.hpp"
#include "oracle.hpp"

using namespace lidcolor;

namespace {

int count_pairs_within(int l, int k) {
    int m = 0;
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) m += j - i <= k;
    return m;
}

}  // namespace

TEST_CASE("gen_path_power") {
    CHECK(gen::gen_path_power(4, 1) == gen::path(4));
    REQUIRE(count_pairs_within(6, 2) == 9);
    CHECK(gen::gen_path_power(6, 2).edge_count() == 9);
    CHECK(gen::gen_path_power(3, 5) == gen::complete(3));
    CHECK_THROWS_AS(gen::gen_path_power(0, 1), InputError);
}

TEST_CASE("gen_subdivided_clique") {
    const Graph c9 = gen::gen_subdivided_clique(3);
    CHECK(c9.size() == 9);
    CHECK(c9.edge_count() == 9);
    CHECK(is_connected(c9));
    for (Vertex v = 0; v < 9; ++v) CHECK(c9.degree(v) == 2);

    const Graph s4 = gen::gen_subdivided_clique(4);
    CHECK(s4.size() == 4 + 2 * 6);
    for (Vertex v = 0; v < 4; ++v) CHECK(s4.degree(v) == 3);

    CHECK(gen::gen_subdivided_clique(2).size() == 4);
    CHECK(gen::gen_subdivided_clique(2).edge_count() == 3);
    CHECK(bipartition(gen::gen_subdivided_clique(2)));
}

TEST_CASE("gen_pendant_clique") {
    const Graph net = gen::gen_pendant_clique(3);
    CHECK(net.size() == 6);
    CHECK(net.edge_count() == 6);
    CHECK(gen::gen_pendant_clique(1) == gen::complete(2));

    const Graph g4 = gen::gen_pendant_clique(4);
    CHECK(g4.size() == 8);
    REQUIRE(oracle::lid_chromatic(g4) == 7);
    CHECK(exact::lid_chromatic(g4, 16).value == 7);
}

TEST_CASE("gen_cograph_tight") {
    CHECK(gen::gen_cograph_tight(2) == gen::path(3));
    const Graph t3 = gen::gen_cograph_tight(3);
    CHECK(t3.size() == 5);
    REQUIRE(oracle::lid_chromatic(t3) == 5);
    CHECK(exact::lid_chromatic(t3, 10).value == 5);
    const Graph t4 = gen::gen_cograph_tight(4);
    CHECK(oracle::clique_number(t4) == 4);
}

TEST_CASE("gen_perfect_counterexample") {
    const Graph g2 = gen::gen_perfect_counterexample(2);
    CHECK(g2.size() == 6);
    CHECK(g2.edge_count() == 8);
    REQUIRE(oracle::lid_chromatic(g2) >= 4);
    CHECK(*exact::lid_chromatic(g2, 12).value >= 4);
    CHECK(greedy_coloring(g2).palette_size() <= 3);

    const Graph g3 = gen::gen_perfect_counterexample(3);
    CHECK(g3.size() == 9);
    CHECK(oracle::clique_number(g3) == 3);
}

TEST_CASE("gen_gadget_clique_pendant") {
    CHECK(gen::gen_gadget_clique_pendant(3) == gen::gen_pendant_clique(3));
    CHECK(gen::gen_gadget_clique_pendant(4).size() == 8);

    int seen = 0;
    oracle::for_each_lid_coloring(gen::gen_gadget_clique_pendant(4), 7, [&](const std::vector<int>& c) {
        ++seen;
        const std::set<int> pendants{c[4], c[5], c[6], c[7]};
        CHECK(pendants.size() == 4);
        return true;
    });
    CHECK(seen > 0);
}

TEST_CASE("gen_projective_graph") {
    for (int q : {2, 3, 5}) {
        const Graph h = gen::gen_projective_graph(q);
        CHECK(h.size() == (q * q + q + 1) * (q + 2));
        for (Vertex v = 0; v < h.size(); ++v) CHECK(h.degree(v) == static_cast<std::size_t>(q + 1));
        // Each point lies in q+1 gadget cliques: its q+1 neighbors sit in distinct cliques.
        const Vertex points = q * q + q + 1;
        for (Vertex p = 0; p < points; ++p) {
            const auto nbrs = h.neighbors(p);
            for (Vertex a : nbrs) {
                CHECK(a >= points);
                for (Vertex b : nbrs)
                    if (a != b) CHECK_FALSE(h.adjacent(a, b));
            }
        }
    }
    CHECK(gen::gen_projective_graph(2).size() == 28);
    CHECK_THROWS_AS(gen::gen_projective_graph(4), InputError);
}

TEST_CASE("np_reduce") {
    const Hypergraph single(3, {{0, 1, 2}});
    const auto red = gen::np_reduce(single, 4);
    CHECK(red.graph.size() == 16);
    CHECK(is_forest(red.graph));
    CHECK(is_connected(red.graph));

    const Hypergraph fano(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
    const auto fr = gen::np_reduce(fano, 4);
    CHECK(fr.graph.max_degree() == 3);
    CHECK(bipartition(fr.graph));
    CHECK(oracle::girth(fr.graph) >= 4);

    for (int g : {8, 20, 36}) {
        const auto r = gen::np_reduce(fano, g);
        CHECK(bipartition(r.graph));
        CHECK(r.graph.max_degree() <= 3);
        CHECK(girth(r.graph).value_or(1000) >= g);
        for (std::size_t v = 0; v < r.map.paths.size(); ++v) {
            const auto& at = r.map.attachments[v];
            for (int i : at) CHECK(i % 4 == 2);
            for (std::size_t i = 1; i < at.size(); ++i) CHECK(at[i] - at[i - 1] - 1 >= (g + 1) / 2);
            CHECK(at.back() <= static_cast<int>(r.map.paths[v].size()) - 3);
        }
    }
    const auto wide = gen::np_reduce(single, 20);
    CHECK(girth(wide.graph) == std::nullopt);

    CHECK_THROWS_AS(gen::np_reduce(Hypergraph(4, {{0, 1, 2, 3}}), 4), InputError);
    CHECK_THROWS_AS(gen::np_reduce(Hypergraph(4, {}), 4), InputError);
}

TEST_CASE("lift_forward and lift_backward") {
    const Hypergraph single(3, {{0, 1, 2}});
    const auto red = gen::np_reduce(single, 4);
    for (const TwoColoring& two : {TwoColoring{0, 0, 1}, TwoColoring{0, 1, 1}}) {
        const Coloring c = gen::lift_forward(two, red.map);
        CHECK(is_lid_coloring(red.graph, c).ok);
        CHECK(c.palette_size() == 3);
        CHECK(gen::lift_backward(red.graph, c, red.map) == two);
    }
    CHECK_THROWS_AS(gen::lift_forward(TwoColoring{0, 0, 0}, red.map), InputError);

    const Coloring invalid(std::vector<Color>(red.graph.size(), 0));
    CHECK_THROWS_AS(gen::lift_backward(red.graph, invalid, red.map), InputError);
}

TEST_CASE("reduction agrees with hypergraph 2-colorability on small instances") {
    gen::Rng rng(17);
    for (int round = 0; round < 150; ++round) {
        const Vertex n = 3 + static_cast<Vertex>(gen::uniform(rng, 5));
        const int m = 1 + static_cast<int>(gen::uniform(rng, 7));
        std::vector<std::vector<Vertex>> edges;
        while (static_cast<int>(edges.size()) < m) {
            std::set<Vertex> e;
            while (e.size() < 3) e.insert(static_cast<Vertex>(gen::uniform(rng, n)));
            edges.emplace_back(e.begin(), e.end());
        }
        const Hypergraph h(n, edges);
        const auto red = gen::np_reduce(h, 4);
        bool yes = true;
        for (const auto& comp : connected_components(red.graph))
            yes = yes && exact::three_lid_decide(red.graph.induced(comp)).has_value();
        CHECK(yes == oracle::two_colorable(h));
    }
}

TEST_CASE("gen_standard") {
    CHECK(gen::gen_standard("cycle", {5}, 1).graph == gen::cycle(5));
    const Graph q3 = gen::gen_standard("hypercube", {3}, 1).graph;
    CHECK(q3.size() == 8);
    CHECK(q3.edge_count() == 12);

    const auto kt = gen::gen_standard("random-ktree", {10, 2}, 1);
    REQUIRE(kt.ktree);
    CHECK_NOTHROW(construct::validate_ktree_order(kt.graph, *kt.ktree));
    CHECK(construct::find_ktree_order(kt.graph, 2));

    const auto iv = gen::gen_standard("random-interval", {15}, 3);
    REQUIRE(iv.intervals);
    CHECK(construct::interval_graph(*iv.intervals) == iv.graph);

    const auto oo = gen::gen_standard("random-outerplanar", {20}, 4);
    REQUIRE(oo.outer);
    CHECK_NOTHROW(construct::validate_outer_order(oo.graph, *oo.outer));

    const auto co = gen::gen_standard("random-cograph", {12}, 5);
    REQUIRE(co.cotree);
    CHECK(co.cotree->to_graph() == co.graph);

    // Same seed, same graph; another seed, (here) another graph.
    CHECK(gen::gen_standard("random-tree", {30}, 9).graph == gen::gen_standard("random-tree", {30}, 9).graph);
    CHECK_FALSE(gen::gen_standard("random-tree", {30}, 9).graph == gen::gen_standard("random-tree", {30}, 10).graph);

    const Graph sp = gen::gen_standard("random-planar", {12, 36}, 6).graph;
    CHECK(girth(sp).value_or(1000) >= 36);
    CHECK(is_connected(gen::gen_standard("random-bipartite", {5, 6}, 7).graph));

    CHECK_THROWS_AS(gen::gen_standard("no-such-family", {}, 1), InputError);
    CHECK_THROWS_AS(gen::gen_standard("cycle", {}, 1), InputError);
    CHECK_THROWS_AS(gen::gen_standard("cycle", {5, 6}, 1), InputError);
}

TEST_CASE("uniform stays in range and is reproducible") {
    gen::Rng a(123), b(123);
    for (int i = 0; i < 1000; ++i) {
        const auto x = gen::uniform(a, 7);
        CHECK(x < 7);
        CHECK(x == gen::uniform(b, 7));
    }
}
