#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "lidcolor/exact.hpp"
#include "lidcolor/gen.hpp"
#include "lidcolor/structure.hpp"
#include "oracle.hpp"

using namespace lidcolor;

TEST_CASE("k_lid_colorable") {
    CHECK_FALSE(exact::k_lid_colorable(gen::path(4), 3));
    const auto p5 = exact::k_lid_colorable(gen::path(5), 3);
    REQUIRE(p5);
    CHECK(is_lid_coloring(gen::path(5), *p5).ok);
    CHECK(p5->palette_size() <= 3);

    REQUIRE(oracle::lid_chromatic(gen::cycle(5)) == 5);
    CHECK_FALSE(exact::k_lid_colorable(gen::cycle(5), 4));

    CHECK_THROWS_AS(exact::k_lid_colorable(gen::path(3), 0), InputError);
}

TEST_CASE("lid_chromatic") {
    CHECK(exact::lid_chromatic(gen::complete(2), 4).value == 2);
    CHECK(exact::lid_chromatic(gen::gen_path_power(6, 2), 12).value == 6);
    CHECK(exact::lid_chromatic(gen::cycle(5), 10).value == 5);
    CHECK(exact::lid_chromatic(Graph(1), 1).value == 1);

    const auto capped = exact::lid_chromatic(gen::path(4), 3);
    CHECK_FALSE(capped.value);

    // Disconnected: maximum over the components.
    const Graph two(9, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {7, 8}});
    const auto r = exact::lid_chromatic(two, 10);
    CHECK(r.value == 4);
    CHECK(is_lid_coloring(two, r.witness).ok);
}

TEST_CASE("lid_chromatic matches enumeration on every connected graph up to 6 vertices") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : oracle::connected_graphs(n)) {
            const auto r = exact::lid_chromatic(g, 2 * n);
            REQUIRE(r.value);
            CHECK(*r.value == oracle::lid_chromatic(g));
            CHECK(oracle::is_lid(oracle::Dense(g), std::vector<int>(r.witness.values().begin(), r.witness.values().end())));
            CHECK(r.witness.palette_size() == *r.value);
        }
}

TEST_CASE("lid_chromatic matches enumeration on random 8-vertex graphs") {
    gen::Rng rng(21);
    for (int round = 0; round < 40; ++round) {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < 8; ++u)
            for (Vertex v = u + 1; v < 8; ++v)
                if (gen::uniform(rng, 100) < 35) edges.emplace_back(u, v);
        const Graph g(8, edges);
        CHECK(exact::lid_chromatic(g, 16).value == oracle::lid_chromatic(g));
    }
}

TEST_CASE("three_lid_decide") {
    const auto k44 = exact::three_lid_decide(gen::complete_bipartite(4, 4));
    REQUIRE(k44);
    CHECK(is_lid_coloring(gen::complete_bipartite(4, 4), *k44).ok);
    CHECK(exact::three_lid_decide(gen::star(3)));
    CHECK_FALSE(exact::three_lid_decide(gen::path(4)));
    CHECK(exact::three_lid_decide(gen::complete(3))->values() == std::vector<Color>{0, 1, 2});
    CHECK_FALSE(exact::three_lid_decide(gen::cycle(5)));
    CHECK_THROWS_AS(exact::three_lid_decide(Graph(3, {{0, 1}})), InputError);

    // The side of vertex 0 is the 2-colored one when both sides work.
    const auto c8 = exact::three_lid_decide(gen::cycle(8));
    REQUIRE(c8);
    CHECK((*c8)[1] == (*c8)[3]);
    CHECK((*c8)[3] == (*c8)[5]);
}

TEST_CASE("three_lid_decide agrees with the backtracking solver") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : oracle::connected_graphs(n)) {
            const auto structural = exact::three_lid_decide(g);
            CHECK(structural.has_value() == exact::k_lid_colorable(g, 3).has_value());
            if (structural) {
                CHECK(is_lid_coloring(g, *structural).ok);
                CHECK(structural->palette_size() <= 3);
            }
        }
    gen::Rng rng(4);
    for (int round = 0; round < 200; ++round) {
        const Vertex a = 1 + static_cast<Vertex>(gen::uniform(rng, 5));
        const Vertex b = 1 + static_cast<Vertex>(gen::uniform(rng, 5));
        const Graph g = gen::random_bipartite(a, b, 250, rng);
        CHECK(exact::three_lid_decide(g).has_value() == exact::k_lid_colorable(g, 3).has_value());
    }
}

TEST_CASE("tree_three_lid") {
    CHECK(plus_one(*exact::tree_three_lid(gen::path(5))) == std::vector<int>{1, 2, 3, 2, 1});
    CHECK_FALSE(exact::tree_three_lid(gen::path(4)));

    // Spider with three legs of length two: leaves pairwise at distance 4.
    const Graph spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    const auto c = exact::tree_three_lid(spider);
    REQUIRE(c);
    CHECK(c->palette_size() == 3);
    CHECK(is_lid_coloring(spider, *c).ok);

    CHECK_THROWS_AS(exact::tree_three_lid(gen::cycle(4)), InputError);
    CHECK_THROWS_AS(exact::tree_three_lid(gen::path(2)), InputError);
}

TEST_CASE("degeneracy_order is a permutation") {
    gen::Rng rng(8);
    const Graph g = gen::random_bipartite(6, 7, 300, rng);
    auto order = exact::degeneracy_order(g);
    std::sort(order.begin(), order.end());
    std::vector<Vertex> ids(g.size());
    std::iota(ids.begin(), ids.end(), 0);
    CHECK(order == ids);
}
