#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lidcolor/coloring.hpp"
#include "lidcolor/construct.hpp"
#include "lidcolor/graph.hpp"
#include "lidcolor/hypergraph.hpp"

namespace lidcolor::gen {

// ---- fixed families ---------------------------------------------------------

Graph path(Vertex n);
Graph cycle(Vertex n);
Graph complete(Vertex n);
Graph complete_bipartite(Vertex a, Vertex b);  ///< sides 0..a-1 and a..a+b-1
Graph star(Vertex leaves);                     ///< center 0
Graph hypercube(int d);
Graph grid(Vertex rows, Vertex cols);          ///< (r, c) numbered r * cols + c

/// P^k_l: vertices 0..l-1, i ~ j iff 0 < |i - j| <= k.
Graph gen_path_power(Vertex l, int k);

/// K_n with every edge replaced by a path of three edges. Original vertices
/// keep ids 0..n-1; edge {i, j} (lexicographic order) adds two vertices.
Graph gen_subdivided_clique(Vertex n);

/// Clique 0..k-1 with pendant k+i attached to i.
Graph gen_pendant_clique(Vertex k);

/// Clique v_1..v_k (ids 0..k-1) plus u_i (id k+i-2) adjacent to v_i..v_k, 2 <= i <= k.
Graph gen_cograph_tight(Vertex k);

/// Stable sets S1 = 0..k-1, S2 = k..2k-1, S3 = 2k..3k-1; S1-S2 complete,
/// S1-S3 the matching i ~ 2k+i, S2-S3 its complement.
Graph gen_perfect_counterexample(Vertex k);

/// Same graph as gen_pendant_clique(n_plus_1).
Graph gen_gadget_clique_pendant(Vertex n_plus_1);

/// H_{q+1} over the projective plane PG(2, q), q prime. Point vertices come
/// first (ids 0..q^2+q), then the q+1 clique vertices of each line.
Graph gen_projective_graph(int q);

/// Points of PG(2, q) as normalized homogeneous coordinates (first nonzero
/// entry 1), in the order used by gen_projective_graph; lines use the same
/// coordinates and point p lies on line l iff p . l = 0 mod q.
std::vector<std::array<int, 3>> projective_points(int q);

// ---- NP-hardness reduction --------------------------------------------------

struct ReductionMap {
    int girth = 0;
    std::vector<std::vector<Vertex>> paths;         ///< P_v for each hypergraph vertex v
    std::vector<std::vector<int>> attachments;      ///< attachment indices on P_v, ascending
    std::vector<Vertex> hyperedge_vertex;           ///< w_e
    std::vector<std::vector<Vertex>> hyperedges;    ///< members of e (hypergraph ids)
    std::vector<std::array<Vertex, 3>> hyperedge_ends;  ///< path vertices adjacent to w_e
};

struct Reduction {
    Graph graph;
    ReductionMap map;
};

/// Bipartite graph of maximum degree 3 and girth at least g that is
/// 3-lid-colorable iff the 3-uniform hypergraph `h` is 2-colorable.
Reduction np_reduce(const Hypergraph& h, int g);

/// 3-lid coloring of the reduced graph from a proper 2-coloring of H.
Coloring lift_forward(const TwoColoring& two, const ReductionMap& map);

/// Proper 2-coloring of H read off a 3-lid coloring of the reduced graph.
TwoColoring lift_backward(const Graph& reduced, const Coloring& c, const ReductionMap& map);

// ---- random instances -------------------------------------------------------

/// Every random generator draws from std::mt19937_64 through `uniform`
/// (rejection sampling), so a seed fixes the output on every platform.
using Rng = std::mt19937_64;
std::uint64_t uniform(Rng& rng, std::uint64_t bound);  ///< in [0, bound)

Graph random_tree(Vertex n, Rng& rng);
/// Connected bipartite graph on sides of size a and b; each further U-V pair
/// becomes an edge with probability per_mille / 1000.
Graph random_bipartite(Vertex a, Vertex b, int per_mille, Rng& rng);
construct::IntervalSet random_intervals(Vertex n, Rng& rng);
std::pair<Graph, construct::KTreeOrder> random_ktree(Vertex n, int k, Rng& rng);
std::pair<Graph, construct::OuterOrder> random_maximal_outerplanar(Vertex n, Rng& rng);
/// Clique of size k and s independent vertices with random attachments.
Graph random_split(Vertex k, Vertex s, Rng& rng);
Graph random_cograph(Vertex n, Rng& rng);
/// Random outerplanar base graph on `base` vertices with some edges dropped,
/// every remaining edge subdivided so that the girth is at least `girth`.
Graph random_subdivided_planar(Vertex base, int girth, Rng& rng);
/// Connected graph whose blocks are triangles and single edges.
Graph random_block_graph(int pieces, Rng& rng);

// ---- by name ----------------------------------------------------------------

struct Instance {
    Graph graph;
    std::optional<construct::IntervalSet> intervals;
    std::optional<construct::KTreeOrder> ktree;
    std::optional<construct::OuterOrder> outer;
    std::optional<construct::Cotree> cotree;
};

/// Family names as accepted by the command line (e.g. "cycle", "path-power",
/// "random-ktree"); throws InputError on unknown names or bad parameters.
Instance gen_standard(const std::string& family, const std::vector<long long>& params, std::uint64_t seed);

/// "name params..." lines describing the accepted families.
std::vector<std::string> family_help();

}  // namespace lidcolor::gen
