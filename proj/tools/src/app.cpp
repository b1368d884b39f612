#include <ostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "lidcolor/gen.hpp"

namespace lidcolor::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Locally identifying colorings of graphs", "lidcolor"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

    std::string graph, coloring, mode = "lid";
    auto* verify = app.add_subcommand("verify", "Check a coloring against a graph");
    verify->add_option("graph", graph, "Graph file ('-' for stdin)")->required();
    verify->add_option("coloring", coloring, "Coloring file")->required();
    verify->add_option("--mode", mode, "Which property to check")->check(CLI::IsMember({"lid", "strong", "nice"}));

    std::optional<int> max_colors;
    auto* chi = app.add_subcommand("chi", "Exact lid-chromatic number with a witness");
    chi->add_option("graph", graph, "Graph file")->required();
    chi->add_option("--max", max_colors, "Largest number of colors to try (default 2n)");

    ColorOptions copt;
    auto* color = app.add_subcommand("color", "Color with a class-specific construction");
    color->add_option("graph", graph, "Graph file")->required();
    color->add_option("--class", copt.cls, "Graph class")
        ->check(CLI::IsMember({"auto", "tree", "bipartite", "product", "ktree", "interval", "split", "cograph",
                               "degree", "outerplanar", "planar-girth36", "blocks"}));
    color->add_option("--factor", copt.factors, "Product factor graph file (give twice)");
    color->add_option("--order", copt.order, "k-tree construction order file");
    color->add_option("--intervals", copt.intervals, "Interval model file");
    color->add_option("--outer", copt.outer, "Outer cycle order file");

    GenOptions gopt;
    auto* gen = app.add_subcommand("gen", "Generate a graph family");
    gen->add_option("family", gopt.family, "Family name")->required();
    gen->add_option("params", gopt.params, "Integer parameters");
    gen->add_option("--seed", gopt.seed, "Random seed")->envname("LIDCOLOR_SEED");
    gen->add_option("--cert", gopt.cert, "Write the certificate (order, intervals, cotree) to this file");
    std::string families_footer = "Families:";
    for (const auto& line : gen::family_help()) families_footer += "\n  " + line;
    gen->footer(families_footer);

    ReduceOptions ropt;
    auto* reduce = app.add_subcommand("reduce", "Hypergraph 2-coloring to 3-lid-coloring reduction");
    reduce->add_option("hypergraph", ropt.hypergraph_file, "Hypergraph file")->required();
    reduce->add_option("--girth", ropt.girth, "Minimum girth of the reduced graph");
    reduce->add_option("--lift", ropt.lift, "Map a coloring across the reduction")
        ->check(CLI::IsMember({"forward", "backward"}));
    reduce->add_option("--coloring", ropt.coloring_file, "Coloring to lift");

    auto* decide3 = app.add_subcommand("decide3", "Decide 3-lid-colorability of a bipartite graph or triangle");
    decide3->add_option("graph", graph, "Graph file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const Streams io{out, err, format == "json" ? Format::json : Format::text};
    if (*verify) return cmd_verify(io, graph, coloring, mode);
    if (*chi) return cmd_chi(io, graph, max_colors);
    if (*color) return cmd_color(io, graph, copt);
    if (*gen) return cmd_gen(io, gopt);
    if (*reduce) return cmd_reduce(io, ropt);
    return cmd_decide3(io, graph);
}

}  // namespace lidcolor::cli
