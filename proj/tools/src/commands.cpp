#include "commands.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "io.hpp"
#include "lidcolor/exact.hpp"
#include "lidcolor/gen.hpp"
#include "lidcolor/structure.hpp"

namespace lidcolor::cli {

using nlohmann::json;

namespace {

struct Report {
    std::string command;
    bool ok = true;
    json value;
    json witness;
    json palette;
};

void emit(const Streams& io, const Report& r) {
    io.out << json{{"command", r.command}, {"ok", r.ok}, {"value", r.value}, {"witness", r.witness},
                   {"palette", r.palette}}
                  .dump()
           << '\n';
}

json colors_json(const Coloring& c) {
    json arr = json::array();
    for (Color x : c.values()) arr.push_back(x + 1);
    return arr;
}

json set_json(const std::vector<Color>& s) {
    json arr = json::array();
    for (Color x : s) arr.push_back(x + 1);
    return arr;
}

// Runs `body`, turning InputError into exit code 2.
int guarded(const Streams& io, const std::string& command, const std::function<int()>& body) {
    try {
        return body();
    } catch (const InputError& e) {
        if (io.format == Format::json)
            io.out << json{{"command", command}, {"ok", false}, {"error", e.what()}}.dump() << '\n';
        io.err << "error: " << e.what() << '\n';
        return 2;
    }
}

Graph load_graph(const std::string& path) { return read_file(path, [](std::istream& in) { return read_graph(in); }); }

Coloring load_coloring(const std::string& path, Vertex n) {
    return read_file(path, [n](std::istream& in) { return read_coloring(in, n); });
}

int max_color_count(const Graph& g) {
    const long long d = static_cast<long long>(g.max_degree());
    return static_cast<int>(d * d * d - d * d + d + 1);
}

struct Colored {
    Coloring coloring;
    std::string cls;
    int bound;
};

Colored color_by_blocks(const Graph& g) {
    // Small blocks get an optimal coloring, larger ones the distance-3 greedy.
    const construct::BlockColorer per_block = [](const Graph& b) {
        if (b.size() <= 10) return exact::lid_chromatic(b, std::max<int>(1, b.size())).witness;
        return construct::color_bounded_degree(b);
    };
    Coloring c = construct::color_via_blocks(g, per_block);
    int bound = 0;
    for (const auto& comp : connected_components(g)) {
        const Graph sub = g.induced(comp);
        const auto bd = blocks(sub);
        int k = 0;
        for (const auto& b : bd.blocks) k = std::max(k, per_block(sub.induced(b)).palette_size());
        if (bd.blocks.empty()) k = 1;
        const int h = bd.cut_vertices.empty() ? 0 : greedy_coloring(sub.induced(bd.cut_vertices)).palette_size();
        bound = std::max(bound, k + h);
    }
    return {std::move(c), "blocks", bound};
}

int ktree_width(const Graph& g) {
    const long long n = g.size();
    const auto m = static_cast<long long>(g.edge_count());
    for (long long k = 1; k < n; ++k)
        if (k * n - k * (k + 1) / 2 == m) return static_cast<int>(k);
    throw InputError("edge count fits no k-tree");
}

Colored color_with(const Graph& g, const std::string& cls, const ColorOptions& opt) {
    using namespace construct;
    if (cls == "tree") return {color_tree(g), cls, 4};
    if (cls == "bipartite") return {color_bipartite(g), cls, 4};
    if (cls == "degree") return {color_bounded_degree(g), cls, max_color_count(g)};
    if (cls == "planar-girth36") return {color_planar_girth36(g), cls, 5};
    if (cls == "blocks") return color_by_blocks(g);
    if (cls == "product") {
        if (opt.factors.size() != 2) throw InputError("--class product needs two --factor files");
        const Graph a = load_graph(opt.factors[0]);
        const Graph b = load_graph(opt.factors[1]);
        if (cartesian_product(a, b) != g) throw InputError("graph is not the product of the given factors");
        return {color_product(a, b), cls, 3};
    }
    if (cls == "ktree") {
        std::optional<KTreeOrder> ord;
        if (!opt.order.empty()) {
            auto seq = read_file(opt.order, [&](std::istream& in) { return read_order(in, g.size()); });
            ord = KTreeOrder{ktree_width(g), std::move(seq)};
        } else {
            ord = find_ktree_order(g);
            if (!ord) throw InputError("not a k-tree");
        }
        return {color_ktree(g, *ord), cls, 2 * ord->k + 2};
    }
    if (cls == "interval") {
        std::optional<IntervalSet> iv;
        if (!opt.intervals.empty()) {
            iv = read_file(opt.intervals, [&](std::istream& in) { return read_intervals(in, g.size()); });
            if (interval_graph(*iv) != g) throw InputError("intervals do not match the graph");
        } else {
            iv = interval_model(g);
            if (!iv) throw InputError("no interval model found");
        }
        return {color_interval(*iv), cls, 2 * interval_clique_number(*iv)};
    }
    if (cls == "split") {
        const auto part = split_partition(g);
        if (!part) throw InputError("not a split graph");
        const int omega = std::max<int>(1, static_cast<int>(part->clique.size()));
        return {color_split(g), cls, 2 * omega - 1};
    }
    if (cls == "cograph") {
        const auto tree = build_cotree(g);
        if (!tree) throw InputError("not a cograph");
        return {color_cograph(*tree), cls, std::max(1, 2 * tree->clique_number() - 1)};
    }
    if (cls == "outerplanar") {
        std::optional<OuterOrder> oo;
        if (!opt.outer.empty())
            oo = OuterOrder{read_file(opt.outer, [&](std::istream& in) { return read_order(in, g.size()); })};
        else
            oo = outer_order(g);
        if (!oo) throw InputError("not an outerplanar graph");
        return {color_outerplanar(g, *oo), cls, 20};
    }
    throw InputError("unknown class '" + cls + "'");
}

Colored color_auto(const Graph& g, const ColorOptions& opt) {
    if (is_forest(g)) return color_with(g, "tree", opt);
    if (construct::build_cotree(g)) return color_with(g, "cograph", opt);
    if (construct::split_partition(g)) return color_with(g, "split", opt);
    if (construct::interval_model(g)) return color_with(g, "interval", opt);
    if (construct::find_ktree_order(g)) return color_with(g, "ktree", opt);
    if (bipartition(g)) return color_with(g, "bipartite", opt);
    return color_with(g, "degree", opt);
}

void write_violation(std::ostream& out, const Witness& w) {
    out << "violation " << to_string(w.kind) << '\n';
    if (w.u == w.v)
        out << "v " << w.u + 1 << '\n';
    else
        out << "e " << w.u + 1 << ' ' << w.v + 1 << '\n';
    auto colors_line = [&](Vertex x, const std::vector<Color>& s) {
        out << "c N[" << x + 1 << "] colors";
        for (Color c : s) out << ' ' << c + 1;
        out << '\n';
    };
    colors_line(w.u, w.colors_u);
    if (w.u != w.v) colors_line(w.v, w.colors_v);
}

}  // namespace

int cmd_verify(const Streams& io, const std::string& graph_file, const std::string& coloring_file,
               const std::string& mode) {
    return guarded(io, "verify", [&] {
        const Graph g = load_graph(graph_file);
        const Coloring c = load_coloring(coloring_file, g.size());
        Verdict verdict;
        if (mode == "lid")
            verdict = is_lid_coloring(g, c);
        else if (mode == "strong")
            verdict = is_strong_lid_coloring(g, c, c.span());
        else if (mode == "nice")
            verdict = is_nice_lid_coloring(g, c);
        else
            throw InputError("unknown mode '" + mode + "'");

        if (io.format == Format::json) {
            Report r{"verify", verdict.ok, mode, nullptr, c.palette_size()};
            if (verdict.witness) {
                const Witness& w = *verdict.witness;
                r.witness = {{"kind", to_string(w.kind)}, {"u", w.u + 1}, {"v", w.v + 1},
                             {"colors_u", set_json(w.colors_u)}, {"colors_v", set_json(w.colors_v)}};
            }
            emit(io, r);
        } else if (verdict.ok) {
            io.out << "ok " << mode << '\n' << "c colors " << c.palette_size() << '\n';
        } else {
            write_violation(io.out, *verdict.witness);
        }
        return verdict.ok ? 0 : 1;
    });
}

int cmd_chi(const Streams& io, const std::string& graph_file, std::optional<int> max_colors) {
    return guarded(io, "chi", [&] {
        const Graph g = load_graph(graph_file);
        const int k = max_colors.value_or(std::max(1, 2 * g.size()));
        if (k < 1) throw InputError("--max must be at least 1");
        const auto result = exact::lid_chromatic(g, k);
        if (io.format == Format::json) {
            Report r{"chi", result.value.has_value(), nullptr, nullptr, nullptr};
            if (result.value) {
                r.value = *result.value;
                r.witness = colors_json(result.witness);
                r.palette = result.witness.palette_size();
            } else {
                r.value = "exceeds " + std::to_string(k);
            }
            emit(io, r);
        } else if (result.value) {
            io.out << "chi_lid " << *result.value << '\n';
            write_coloring(io.out, result.witness);
        } else {
            io.out << "exceeds " << k << '\n';
        }
        return result.value ? 0 : 1;
    });
}

int cmd_color(const Streams& io, const std::string& graph_file, const ColorOptions& opt) {
    return guarded(io, "color", [&] {
        const Graph g = load_graph(graph_file);
        const Colored res = opt.cls == "auto" ? color_auto(g, opt) : color_with(g, opt.cls, opt);
        const Coloring c = res.coloring.normalized();
        if (!is_lid_coloring(g, c)) throw std::logic_error("colorer produced an invalid coloring");
        if (io.format == Format::json) {
            emit(io, Report{"color", true, {{"class", res.cls}, {"bound", res.bound}}, colors_json(c),
                            c.palette_size()});
        } else {
            write_coloring(io.out, c);
            io.out << "c class " << res.cls << '\n'
                   << "c colors " << c.palette_size() << '\n'
                   << "c bound " << res.bound << '\n';
        }
        return 0;
    });
}

int cmd_gen(const Streams& io, const GenOptions& opt) {
    return guarded(io, "gen", [&] {
        const gen::Instance inst = gen::gen_standard(opt.family, opt.params, opt.seed);
        if (!opt.cert.empty()) {
            std::ostringstream cert;
            if (inst.intervals)
                write_intervals(cert, *inst.intervals);
            else if (inst.ktree)
                write_order(cert, inst.ktree->order);
            else if (inst.outer)
                write_order(cert, inst.outer->cycle);
            else if (inst.cotree)
                write_cotree(cert, *inst.cotree);
            else
                throw InputError("family '" + opt.family + "' has no certificate");
            std::ofstream file(opt.cert);
            if (!file || !(file << cert.str())) throw InputError(opt.cert + ": cannot write certificate");
        }
        if (io.format == Format::json) {
            json edges = json::array();
            for (auto [u, v] : inst.graph.edges()) edges.push_back({u + 1, v + 1});
            emit(io, Report{"gen", true, {{"n", inst.graph.size()}, {"m", inst.graph.edge_count()}}, edges, nullptr});
        } else {
            io.out << "c " << opt.family;
            for (long long p : opt.params) io.out << ' ' << p;
            io.out << " seed " << opt.seed << '\n';
            write_graph(io.out, inst.graph);
        }
        return 0;
    });
}

int cmd_reduce(const Streams& io, const ReduceOptions& opt) {
    return guarded(io, "reduce", [&] {
        const Hypergraph h = read_file(opt.hypergraph_file, [](std::istream& in) { return read_hypergraph(in); });
        const gen::Reduction red = gen::np_reduce(h, opt.girth);
        if (!opt.lift.empty() && opt.coloring_file.empty()) throw InputError("--lift needs --coloring");

        if (opt.lift == "forward") {
            const Coloring two = load_coloring(opt.coloring_file, h.size());
            const Coloring c = gen::lift_forward(TwoColoring(two.values().begin(), two.values().end()), red.map);
            if (io.format == Format::json)
                emit(io, Report{"reduce", true, "forward", colors_json(c), c.palette_size()});
            else
                write_coloring(io.out, c);
            return 0;
        }
        if (opt.lift == "backward") {
            const Coloring c = load_coloring(opt.coloring_file, red.graph.size());
            const TwoColoring two = gen::lift_backward(red.graph, c, red.map);
            const Coloring as_coloring(std::vector<Color>(two.begin(), two.end()));
            if (io.format == Format::json)
                emit(io, Report{"reduce", true, "backward", colors_json(as_coloring), 2});
            else
                write_coloring(io.out, as_coloring);
            return 0;
        }
        if (!opt.lift.empty()) throw InputError("unknown lift '" + opt.lift + "'");

        if (io.format == Format::json) {
            json edges = json::array();
            for (auto [u, v] : red.graph.edges()) edges.push_back({u + 1, v + 1});
            emit(io, Report{"reduce", true, {{"n", red.graph.size()}, {"m", red.graph.edge_count()}}, edges, nullptr});
            return 0;
        }
        write_graph(io.out, red.graph);
        const auto& map = red.map;
        io.out << "c map girth " << map.girth << '\n';
        for (std::size_t v = 0; v < map.paths.size(); ++v) {
            io.out << "c map path " << v + 1;
            for (Vertex x : map.paths[v]) io.out << ' ' << x + 1;
            io.out << '\n';
        }
        for (std::size_t e = 0; e < map.hyperedge_vertex.size(); ++e) {
            io.out << "c map hyperedge " << e + 1 << ' ' << map.hyperedge_vertex[e] + 1;
            for (Vertex x : map.hyperedge_ends[e]) io.out << ' ' << x + 1;
            io.out << '\n';
        }
        return 0;
    });
}

int cmd_decide3(const Streams& io, const std::string& graph_file) {
    return guarded(io, "decide3", [&] {
        const Graph g = load_graph(graph_file);
        std::vector<Color> colors(g.size(), 0);
        bool yes = true;
        for (const auto& comp : connected_components(g)) {
            const auto part = exact::three_lid_decide(g.induced(comp));
            if (!part) {
                yes = false;
                break;
            }
            for (std::size_t i = 0; i < comp.size(); ++i) colors[comp[i]] = (*part)[static_cast<Vertex>(i)];
        }
        const Coloring c(std::move(colors));
        if (io.format == Format::json) {
            emit(io, yes ? Report{"decide3", true, "yes", colors_json(c), c.palette_size()}
                         : Report{"decide3", false, "no", nullptr, nullptr});
        } else {
            io.out << (yes ? "yes" : "no") << '\n';
            if (yes) write_coloring(io.out, c);
        }
        return yes ? 0 : 1;
    });
}

}  // namespace lidcolor::cli
