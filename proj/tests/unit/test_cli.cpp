#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "io.hpp"
#include "lidcolor/gen.hpp"

using namespace lidcolor;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("lidcolor_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string write(const std::string& name, const std::string& text) const {
        const auto p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

std::string graph_text(const Graph& g) {
    std::ostringstream ss;
    cli::write_graph(ss, g);
    return ss.str();
}

Graph parse_graph(const std::string& text) {
    std::istringstream ss(text);
    return cli::read_graph(ss);
}

Coloring parse_coloring(const std::string& text, Vertex n) {
    // Only the `v` lines; comments are skipped by the reader.
    std::istringstream ss(text);
    return cli::read_coloring(ss, n);
}

}  // namespace

TEST_CASE("verify") {
    TempDir dir;
    const auto p5 = dir.write("p5.g", graph_text(gen::path(5)));
    const auto p4 = dir.write("p4.g", graph_text(gen::path(4)));
    const auto c5 = dir.write("p5.c", "v 1 1\nv 2 2\nv 3 3\nv 4 2\nv 5 1\n");
    const auto c4 = dir.write("p4.c", "v 1 1\nv 2 2\nv 3 1\nv 4 2\n");

    CHECK(run({"verify", p5, c5}).code == 0);
    const Result bad = run({"verify", p4, c4});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("e 1 2\n") != std::string::npos);

    const auto junk = dir.write("junk.g", "p edge 3\n");
    CHECK(run({"verify", junk, c4}).code == 2);
    CHECK(run({"verify", dir.file("missing.g"), c4}).code == 2);
    CHECK(run({"verify", p4, c4, "--mode", "bogus"}).code == 2);

    const auto strong = run({"verify", p5, c5, "--mode", "strong"});
    CHECK(strong.code == 1);
    CHECK(strong.out.find("full-palette") != std::string::npos);

    const auto c12 = dir.write("c12.g", graph_text(gen::cycle(12)));
    const auto nice = dir.write("c12.c", "v 1 1\nv 2 2\nv 3 3\nv 4 4\nv 5 1\nv 6 2\nv 7 3\nv 8 4\nv 9 1\nv 10 2\nv 11 3\nv 12 4\n");
    CHECK(run({"verify", c12, nice, "--mode", "nice"}).code == 0);
}

TEST_CASE("parse errors") {
    TempDir dir;
    const auto c = dir.write("c", "v 1 1\n");
    for (const char* text : {"", "e 1 2\n", "p edge 2 1\ne 1 3\n", "p edge 2 2\ne 1 2\n", "p edge 2 1\ne 1 1\n",
                             "p edge 2 1\ne 1 x\n", "p col 2 1\ne 1 2\n"}) {
        const auto g = dir.write("g", text);
        CHECK(run({"verify", g, c}).code == 2);
    }
    const auto g = dir.write("ok.g", "c comment\np edge 2 1\ne 1 2\n");
    CHECK(run({"verify", g, dir.write("c1", "v 1 1\n")}).code == 2);          // vertex 2 uncolored
    CHECK(run({"verify", g, dir.write("c2", "v 1 1\nv 1 2\nv 2 1\n")}).code == 2);
    CHECK(run({"verify", g, dir.write("c3", "v 1 0\nv 2 1\n")}).code == 2);
    CHECK(run({"verify", g, dir.write("c4", "v 1 1\nv 2 2\n")}).code == 0);
}

TEST_CASE("chi") {
    TempDir dir;
    const Result p4 = run({"chi", dir.write("p4.g", graph_text(gen::path(4)))});
    CHECK(p4.code == 0);
    CHECK(p4.out.rfind("chi_lid 4\n", 0) == 0);

    CHECK(run({"chi", dir.write("pp.g", graph_text(gen::gen_path_power(6, 2)))}).out.rfind("chi_lid 6\n", 0) == 0);
    CHECK(run({"chi", dir.write("k1.g", graph_text(Graph(1)))}).out.rfind("chi_lid 1\n", 0) == 0);

    const Result capped = run({"chi", dir.file("p4.g"), "--max", "3"});
    CHECK(capped.code == 1);
    CHECK(capped.out == "exceeds 3\n");

    const Result js = run({"--format", "json", "chi", dir.file("p4.g")});
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["command"] == "chi");
    CHECK(j["ok"] == true);
    CHECK(j["value"] == 4);
    CHECK(j["palette"] == 4);
    CHECK(j["witness"].size() == 4);
}

TEST_CASE("color emits verifiable colorings") {
    TempDir dir;
    auto check = [&](const Graph& g, std::vector<std::string> extra, int max_colors) {
        const auto gf = dir.write("g", graph_text(g));
        std::vector<std::string> args{"color", gf};
        args.insert(args.end(), extra.begin(), extra.end());
        const Result r = run(args);
        REQUIRE(r.code == 0);
        const auto cf = dir.write("c", r.out);
        CHECK(run({"verify", gf, cf}).code == 0);
        const Coloring c = parse_coloring(r.out, g.size());
        CHECK(c.palette_size() <= max_colors);
        CHECK(r.out.find("c bound") != std::string::npos);
    };
    check(gen::cycle(8), {"--class", "bipartite"}, 4);
    check(gen::cycle(36), {"--class", "planar-girth36"}, 5);
    check(gen::path(5), {}, 3);
    check(gen::gen_path_power(6, 2), {"--class", "ktree"}, 6);
    check(gen::gen_pendant_clique(3), {"--class", "split"}, 5);
    check(gen::gen_cograph_tight(3), {"--class", "cograph"}, 5);
    check(gen::cycle(9), {"--class", "degree"}, 7);
    check(gen::cycle(9), {"--class", "outerplanar"}, 20);
    check(gen::cycle(9), {"--class", "blocks"}, 9);
    check(gen::cycle(9), {}, 9);
    check(gen::gen_path_power(6, 2), {"--class", "interval"}, 6);

    const auto p3 = dir.write("p3.g", graph_text(gen::path(3)));
    const auto grid = dir.write("grid.g", graph_text(gen::grid(3, 3)));
    const Result prod = run({"color", grid, "--class", "product", "--factor", p3, "--factor", p3});
    CHECK(prod.code == 0);
    CHECK(parse_coloring(prod.out, 9).palette_size() == 3);
    CHECK(run({"color", grid, "--class", "product", "--factor", p3}).code == 2);

    const Result split = run({"color", dir.write("c4.g", graph_text(gen::cycle(4))), "--class", "split"});
    CHECK(split.code == 2);
    CHECK(split.err.find("not a split graph") != std::string::npos);
}

TEST_CASE("color with certificate files") {
    TempDir dir;
    const auto gk = dir.file("kt.g");
    const auto ok = dir.file("kt.ord");
    const Result gen = run({"gen", "random-ktree", "12", "3", "--seed", "4", "--cert", ok});
    REQUIRE(gen.code == 0);
    dir.write("kt.g", gen.out);
    CHECK(run({"color", gk, "--class", "ktree", "--order", ok}).code == 0);
    dir.write("bad.ord", "1 2 3\n");
    CHECK(run({"color", gk, "--class", "ktree", "--order", dir.file("bad.ord")}).code == 2);

    const auto iv = dir.file("iv.txt");
    const Result gi = run({"gen", "random-interval", "14", "--cert", iv});
    dir.write("iv.g", gi.out);
    CHECK(run({"color", dir.file("iv.g"), "--class", "interval", "--intervals", iv}).code == 0);

    const auto oo = dir.file("oo.txt");
    const Result go = run({"gen", "random-outerplanar", "25", "--cert", oo});
    dir.write("oo.g", go.out);
    CHECK(run({"color", dir.file("oo.g"), "--class", "outerplanar", "--outer", oo}).code == 0);

    CHECK(run({"gen", "cycle", "5", "--cert", dir.file("none")}).code == 2);
}

TEST_CASE("gen") {
    const Result pc = run({"gen", "pendant-clique", "3"});
    CHECK(pc.code == 0);
    CHECK(parse_graph(pc.out).size() == 6);
    CHECK(parse_graph(run({"gen", "projective", "2"}).out).size() == 28);
    CHECK(parse_graph(run({"gen", "path-power", "6", "2"}).out) == gen::gen_path_power(6, 2));

    // Round trip through the text format keeps the labels.
    for (const char* fam : {"random-tree", "random-cograph", "random-blocks"}) {
        const Result r = run({"gen", fam, "15", "--seed", "3"});
        const Graph parsed = parse_graph(r.out);
        CHECK(parsed == gen::gen_standard(fam, {15}, 3).graph);
        CHECK(graph_text(parsed) == r.out.substr(r.out.find('\n') + 1));
    }
    CHECK(run({"gen", "random-tree", "15", "--seed", "3"}).out == run({"gen", "random-tree", "15", "--seed", "3"}).out);
    CHECK(run({"gen", "nothing"}).code == 2);
    CHECK(run({"gen", "cycle", "2"}).code == 2);
}

TEST_CASE("gen seed from the environment") {
    ::setenv("LIDCOLOR_SEED", "77", 1);
    const std::string from_env = run({"gen", "random-tree", "20"}).out;
    const std::string explicit_seed = run({"gen", "random-tree", "20", "--seed", "5"}).out;
    ::unsetenv("LIDCOLOR_SEED");
    CHECK(from_env.find("seed 77") != std::string::npos);
    CHECK(explicit_seed.find("seed 5") != std::string::npos);
    CHECK(run({"gen", "random-tree", "20", "--seed", "77"}).out == from_env);
}

TEST_CASE("reduce and decide3") {
    TempDir dir;
    const auto single = dir.write("e.h", "p hyper 3 1\nh 1 2 3\n");
    const Result red = run({"reduce", single});
    CHECK(red.code == 0);
    CHECK(parse_graph(red.out).size() == 16);

    const auto fano = dir.write("fano.h", "p hyper 7 7\nh 1 2 3\nh 1 4 5\nh 1 6 7\nh 2 4 6\nh 2 5 7\nh 3 4 7\nh 3 5 6\n");
    const auto fg = dir.write("fano.g", run({"reduce", fano}).out);
    const Result no = run({"decide3", fg});
    CHECK(no.code == 1);
    CHECK(no.out == "no\n");

    const auto two = dir.write("two.c", "v 1 1\nv 2 1\nv 3 2\n");
    const Result fwd = run({"reduce", single, "--lift", "forward", "--coloring", two});
    CHECK(fwd.code == 0);
    const auto sg = dir.write("single.g", red.out);
    const auto lifted = dir.write("lifted.c", fwd.out);
    CHECK(run({"verify", sg, lifted}).code == 0);
    const Result back = run({"reduce", single, "--lift", "backward", "--coloring", lifted});
    CHECK(back.code == 0);
    CHECK(back.out == "v 1 1\nv 2 1\nv 3 2\n");

    const auto mono = dir.write("mono.c", "v 1 1\nv 2 1\nv 3 1\n");
    CHECK(run({"reduce", single, "--lift", "forward", "--coloring", mono}).code == 2);
    CHECK(run({"reduce", dir.write("four.h", "p hyper 4 1\nh 1 2 3 4\n")}).code == 2);
    CHECK(run({"reduce", single, "--lift", "forward"}).code == 2);

    const Result k44 = run({"decide3", dir.write("k44.g", graph_text(gen::complete_bipartite(4, 4)))});
    CHECK(k44.code == 0);
    CHECK(k44.out.rfind("yes\n", 0) == 0);
    CHECK(run({"decide3", dir.write("p4.g", graph_text(gen::path(4)))}).code == 1);
    CHECK(run({"decide3", dir.write("k3.g", graph_text(gen::complete(3)))}).code == 0);

    const auto js = nlohmann::json::parse(run({"decide3", fg, "--format", "json"}).out);
    CHECK(js["value"] == "no");
    CHECK(js["ok"] == false);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"chi"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
