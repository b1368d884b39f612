#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "lidcolor/gen.hpp"
#include "lidcolor/structure.hpp"
#include "oracle.hpp"

using namespace lidcolor;

TEST_CASE("graph construction rejects loops and merges parallel edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InputError);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), InputError);
    const Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("is_lid_coloring on small paths and cliques") {
    CHECK(is_lid_coloring(gen::path(5), colors1({1, 2, 3, 2, 1})).ok);
    CHECK(is_lid_coloring(gen::complete(3), colors1({1, 2, 3})).ok);

    const Graph p4 = gen::path(4);
    const Verdict v = is_lid_coloring(p4, colors1({1, 2, 1, 2}));
    REQUIRE_FALSE(v.ok);
    REQUIRE(v.witness);
    // First failing edge in lexicographic order; (v2, v3) fails as well.
    CHECK(v.witness->u == 0);
    CHECK(v.witness->v == 1);
    CHECK(v.witness->kind == Violation::identical_sets);
    CHECK(v.witness->colors_u == std::vector<Color>{0, 1});
    CHECK(v.witness->colors_v == std::vector<Color>{0, 1});
    CHECK(p4.closed_neighborhood(1) != p4.closed_neighborhood(2));

    const Verdict improper = is_lid_coloring(p4, colors1({1, 1, 2, 3}));
    REQUIRE(improper.witness);
    CHECK(improper.witness->kind == Violation::improper);

    CHECK_THROWS_AS(is_lid_coloring(p4, colors1({1, 2, 3})), InputError);
}

TEST_CASE("verifier witnesses are genuine violations") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 400; ++round) {
        const int n = 2 + static_cast<int>(rng() % 8);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) edges.emplace_back(u, v);
        const Graph g(n, edges);
        std::vector<Color> raw(n);
        for (auto& c : raw) c = static_cast<Color>(rng() % 4);
        const Coloring c(raw);
        const Verdict v = is_lid_coloring(g, c);
        CHECK(v.ok == oracle::is_lid(oracle::Dense(g), std::vector<int>(raw.begin(), raw.end())));
        if (v.ok) continue;
        REQUIRE(v.witness);
        const auto [a, b] = std::pair{v.witness->u, v.witness->v};
        REQUIRE(g.adjacent(a, b));
        if (v.witness->kind == Violation::improper) {
            CHECK(c[a] == c[b]);
        } else {
            const auto na = g.closed_neighborhood(a);
            const auto nb = g.closed_neighborhood(b);
            std::set<Color> sa, sb;
            for (Vertex x : na) sa.insert(c[x]);
            for (Vertex x : nb) sb.insert(c[x]);
            CHECK(na != nb);
            CHECK(sa == sb);
        }
    }
}

TEST_CASE("is_strong_lid_coloring") {
    CHECK(is_strong_lid_coloring(Graph(1), colors1({1}), 1).ok);
    CHECK(is_strong_lid_coloring(gen::complete(3), colors1({1, 2, 3}), 3).ok);
    // The center of P_3 sees every color but is universal.
    CHECK(is_strong_lid_coloring(gen::path(3), colors1({1, 2, 3}), 3).ok);

    const Verdict v = is_strong_lid_coloring(gen::path(5), colors1({1, 2, 3, 2, 1}), 3);
    REQUIRE_FALSE(v.ok);
    CHECK(v.witness->kind == Violation::full_palette);
}

TEST_CASE("is_nice_lid_coloring") {
    CHECK(is_nice_lid_coloring(gen::cycle(12), colors1({1, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 4})).ok);
    CHECK(is_nice_lid_coloring(gen::path(2), colors1({1, 2})).ok);
    const Verdict v = is_nice_lid_coloring(gen::cycle(12), colors1({1, 2, 3, 4, 5, 6, 1, 2, 3, 4, 5, 6}));
    REQUIRE_FALSE(v.ok);
    CHECK(v.witness->kind == Violation::palette_too_large);
}

TEST_CASE("girth") {
    CHECK(girth(gen::cycle(5)) == 5);
    gen::Rng tree_rng(3);
    CHECK_FALSE(girth(gen::random_tree(20, tree_rng)).has_value());

    // K_4 with every edge replaced by a path of 12 edges.
    std::vector<Edge> edges;
    Vertex next = 4;
    for (Vertex a = 0; a < 4; ++a)
        for (Vertex b = a + 1; b < 4; ++b) {
            Vertex prev = a;
            for (int i = 1; i < 12; ++i) {
                edges.emplace_back(prev, next);
                prev = next++;
            }
            edges.emplace_back(prev, b);
        }
    const Graph g(next, edges);
    REQUIRE(oracle::girth(g) == 36);
    CHECK(girth(g) == 36);

    std::mt19937_64 rng(11);
    for (int round = 0; round < 100; ++round) {
        const int n = 3 + static_cast<int>(rng() % 10);
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 4 == 0) es.emplace_back(u, v);
        const Graph h(n, es);
        CHECK(girth(h).value_or(-1) == oracle::girth(h));
    }
}

TEST_CASE("bipartition") {
    const auto c4 = bipartition(gen::cycle(4));
    REQUIRE(c4);
    CHECK(c4->u == std::vector<Vertex>{0, 2});
    CHECK(c4->v == std::vector<Vertex>{1, 3});
    CHECK_FALSE(bipartition(gen::cycle(5)));
    const auto p5 = bipartition(gen::path(5));
    REQUIRE(p5);
    CHECK(p5->u == std::vector<Vertex>{0, 2, 4});
    CHECK(p5->v == std::vector<Vertex>{1, 3});
}

TEST_CASE("cartesian_product") {
    const Graph k2 = gen::complete(2);
    const Graph c4 = cartesian_product(k2, k2);
    CHECK(c4.size() == 4);
    CHECK(c4.edge_count() == 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
    CHECK(is_connected(c4));

    CHECK(cartesian_product(gen::path(3), gen::path(3)).edge_count() == 12);

    const Graph q3 = cartesian_product(c4, k2);
    CHECK(q3.edge_count() == 12);
    for (Vertex v = 0; v < q3.size(); ++v) CHECK(q3.degree(v) == 3);

    const Graph a = gen::path(3), b = gen::cycle(4);
    const Graph ab = cartesian_product(a, b), ba = cartesian_product(b, a);
    CHECK(ab.edge_count() == static_cast<std::size_t>(a.size()) * b.edge_count() + b.size() * a.edge_count());
    for (auto [x, y] : ab.edges()) {
        const auto swap = [&](Vertex id) { return (id % b.size()) * a.size() + id / b.size(); };
        CHECK(ba.adjacent(swap(x), swap(y)));
    }
    CHECK(ab.edge_count() == ba.edge_count());
}

TEST_CASE("blocks") {
    const Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    const auto bd = blocks(bowtie);
    CHECK(bd.blocks.size() == 2);
    CHECK(bd.cut_vertices == std::vector<Vertex>{0});

    gen::Rng rng(5);
    const Graph tree = gen::random_tree(15, rng);
    CHECK(blocks(tree).blocks.size() == 14);

    const auto c6 = blocks(gen::cycle(6));
    CHECK(c6.blocks.size() == 1);
    CHECK(c6.cut_vertices.empty());

    // Every edge lies in exactly one block.
    for (int round = 0; round < 30; ++round) {
        const Graph g = gen::random_block_graph(12, rng);
        const auto dec = blocks(g);
        for (auto [u, v] : g.edges()) {
            int holders = 0;
            for (const auto& b : dec.blocks)
                holders += std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v);
            CHECK(holders == 1);
        }
        for (Vertex v = 0; v < g.size(); ++v) {
            int count = 0;
            for (const auto& b : dec.blocks) count += std::binary_search(b.begin(), b.end(), v);
            CHECK((count >= 2) == std::binary_search(dec.cut_vertices.begin(), dec.cut_vertices.end(), v));
        }
    }
}

TEST_CASE("neighborhood_hypergraph") {
    const Graph k44 = gen::complete_bipartite(4, 4);
    const std::vector<Vertex> u{0, 1, 2, 3}, v{4, 5, 6, 7};
    const Hypergraph h = neighborhood_hypergraph(k44, u, v);
    REQUIRE(h.edges().size() == 4);
    for (const auto& e : h.edges()) CHECK(e == u);

    const std::vector<Vertex> pu{0, 2}, pv{1};
    CHECK(neighborhood_hypergraph(gen::path(3), pu, pv).edges() == std::vector<std::vector<Vertex>>{{0, 2}});

    const std::vector<Vertex> cu{0, 2, 4}, cv{1, 3, 5};
    const auto ce = neighborhood_hypergraph(gen::cycle(6), cu, cv).edges();
    CHECK(ce == std::vector<std::vector<Vertex>>{{0, 2}, {2, 4}, {0, 4}});
}

TEST_CASE("two_color_hypergraph") {
    const Hypergraph single(3, {{0, 1, 2}});
    const auto s = two_color_hypergraph(single);
    REQUIRE(s);
    CHECK(is_proper_two_coloring(single, *s));

    const Hypergraph fano(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
    REQUIRE_FALSE(oracle::two_colorable(fano));
    CHECK_FALSE(two_color_hypergraph(fano));

    CHECK_FALSE(two_color_hypergraph(Hypergraph(3, {{1}, {0, 2}})));
    CHECK_THROWS_AS(two_color_hypergraph(Hypergraph(3, {{}})), InputError);

    std::mt19937_64 rng(3);
    for (int round = 0; round < 300; ++round) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const int m = static_cast<int>(rng() % 14);
        std::vector<std::vector<Vertex>> edges;
        for (int i = 0; i < m; ++i) {
            std::vector<Vertex> e;
            for (int v = 0; v < n; ++v)
                if (rng() % 3 == 0) e.push_back(v);
            if (e.empty()) e.push_back(static_cast<Vertex>(rng() % n));
            edges.push_back(e);
        }
        const Hypergraph h(n, edges);
        const auto got = two_color_hypergraph(h);
        CHECK(got.has_value() == oracle::two_colorable(h));
        if (got) CHECK(is_proper_two_coloring(h, *got));
    }
}
