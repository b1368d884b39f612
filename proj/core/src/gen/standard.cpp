#include <functional>
#include <map>

#include "lidcolor/gen.hpp"

namespace lidcolor::gen {

namespace {

using Params = std::vector<long long>;
using Builder = std::function<Instance(const Params&, Rng&)>;

struct Family {
    std::string usage;
    std::size_t required;
    std::size_t optional;
    Builder build;
};

Vertex arg(const Params& p, std::size_t i) {
    if (p[i] < -1'000'000'000 || p[i] > 1'000'000'000) throw InputError("parameter out of range");
    return static_cast<Vertex>(p[i]);
}

Instance plain(Graph g) { return Instance{std::move(g), {}, {}, {}, {}}; }

const std::map<std::string, Family>& families() {
    static const std::map<std::string, Family> table = {
        {"path", {"n", 1, 0, [](const Params& p, Rng&) { return plain(path(arg(p, 0))); }}},
        {"cycle", {"n", 1, 0, [](const Params& p, Rng&) { return plain(cycle(arg(p, 0))); }}},
        {"complete", {"n", 1, 0, [](const Params& p, Rng&) { return plain(complete(arg(p, 0))); }}},
        {"complete-bipartite",
         {"a b", 2, 0, [](const Params& p, Rng&) { return plain(complete_bipartite(arg(p, 0), arg(p, 1))); }}},
        {"hypercube", {"d", 1, 0, [](const Params& p, Rng&) { return plain(hypercube(arg(p, 0))); }}},
        {"grid", {"rows cols", 2, 0, [](const Params& p, Rng&) { return plain(grid(arg(p, 0), arg(p, 1))); }}},
        {"star", {"leaves", 1, 0, [](const Params& p, Rng&) { return plain(star(arg(p, 0))); }}},
        {"path-power",
         {"l k", 2, 0, [](const Params& p, Rng&) { return plain(gen_path_power(arg(p, 0), arg(p, 1))); }}},
        {"subdivided-clique",
         {"n", 1, 0, [](const Params& p, Rng&) { return plain(gen_subdivided_clique(arg(p, 0))); }}},
        {"pendant-clique", {"k", 1, 0, [](const Params& p, Rng&) { return plain(gen_pendant_clique(arg(p, 0))); }}},
        {"cograph-tight", {"k", 1, 0, [](const Params& p, Rng&) { return plain(gen_cograph_tight(arg(p, 0))); }}},
        {"perfect-counterexample",
         {"k", 1, 0, [](const Params& p, Rng&) { return plain(gen_perfect_counterexample(arg(p, 0))); }}},
        {"gadget", {"n+1", 1, 0, [](const Params& p, Rng&) { return plain(gen_gadget_clique_pendant(arg(p, 0))); }}},
        {"projective", {"q", 1, 0, [](const Params& p, Rng&) { return plain(gen_projective_graph(arg(p, 0))); }}},
        {"random-tree", {"n", 1, 0, [](const Params& p, Rng& rng) { return plain(random_tree(arg(p, 0), rng)); }}},
        {"random-bipartite",
         {"a b [per-mille=200]", 2, 1,
          [](const Params& p, Rng& rng) {
              const int pm = p.size() > 2 ? arg(p, 2) : 200;
              return plain(random_bipartite(arg(p, 0), arg(p, 1), pm, rng));
          }}},
        {"random-interval",
         {"n", 1, 0,
          [](const Params& p, Rng& rng) {
              auto iv = random_intervals(arg(p, 0), rng);
              Instance inst = plain(construct::interval_graph(iv));
              inst.intervals = std::move(iv);
              return inst;
          }}},
        {"random-ktree",
         {"n k", 2, 0,
          [](const Params& p, Rng& rng) {
              auto [g, order] = random_ktree(arg(p, 0), arg(p, 1), rng);
              Instance inst = plain(std::move(g));
              inst.ktree = std::move(order);
              return inst;
          }}},
        {"random-outerplanar",
         {"n", 1, 0,
          [](const Params& p, Rng& rng) {
              auto [g, oo] = random_maximal_outerplanar(arg(p, 0), rng);
              Instance inst = plain(std::move(g));
              inst.outer = std::move(oo);
              return inst;
          }}},
        {"random-split",
         {"k s", 2, 0, [](const Params& p, Rng& rng) { return plain(random_split(arg(p, 0), arg(p, 1), rng)); }}},
        {"random-cograph",
         {"n", 1, 0,
          [](const Params& p, Rng& rng) {
              Instance inst = plain(random_cograph(arg(p, 0), rng));
              inst.cotree = construct::build_cotree(inst.graph);
              return inst;
          }}},
        {"random-planar",
         {"base girth", 2, 0,
          [](const Params& p, Rng& rng) { return plain(random_subdivided_planar(arg(p, 0), arg(p, 1), rng)); }}},
        {"random-blocks",
         {"pieces", 1, 0, [](const Params& p, Rng& rng) { return plain(random_block_graph(arg(p, 0), rng)); }}},
    };
    return table;
}

}  // namespace

Instance gen_standard(const std::string& family, const std::vector<long long>& params, std::uint64_t seed) {
    const auto& table = families();
    const auto it = table.find(family);
    if (it == table.end()) throw InputError("unknown family '" + family + "'");
    const Family& f = it->second;
    if (params.size() < f.required || params.size() > f.required + f.optional)
        throw InputError("family '" + family + "' expects parameters: " + f.usage);
    Rng rng(seed);
    return f.build(params, rng);
}

std::vector<std::string> family_help() {
    std::vector<std::string> out;
    for (const auto& [name, f] : families()) out.push_back(name + " " + f.usage);
    return out;
}

}  // namespace lidcolor::gen
