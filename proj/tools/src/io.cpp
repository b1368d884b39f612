#include "io.hpp"

#include <charconv>
#include <sstream>

namespace lidcolor::cli {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

// Non-empty, non-comment lines split on whitespace.
std::vector<Line> data_lines(std::istream& in) {
    std::vector<Line> out;
    std::string text;
    int number = 0;
    while (std::getline(in, text)) {
        ++number;
        std::istringstream ss(text);
        Line line{number, {}};
        for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
        if (line.tokens.empty() || line.tokens[0] == "c") continue;
        out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
    throw InputError("line " + std::to_string(line.number) + ": " + what);
}

long long number(const Line& line, std::size_t i) {
    if (i >= line.tokens.size()) fail(line, "missing field");
    const std::string& tok = line.tokens[i];
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(line, "expected an integer, got '" + tok + "'");
    return value;
}

Vertex vertex(const Line& line, std::size_t i, Vertex n) {
    const long long v = number(line, i);
    if (v < 1 || v > n) fail(line, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    return static_cast<Vertex>(v - 1);
}

void expect_fields(const Line& line, std::size_t count) {
    if (line.tokens.size() != count) fail(line, "expected " + std::to_string(count) + " fields");
}

// Reads the `p <kind> <n> <m>` header that must precede everything else.
std::pair<Vertex, long long> header(const std::vector<Line>& lines, const std::string& kind) {
    if (lines.empty() || lines[0].tokens[0] != "p") throw InputError("missing 'p " + kind + "' line");
    const Line& p = lines[0];
    expect_fields(p, 4);
    if (p.tokens[1] != kind) fail(p, "expected 'p " + kind + "'");
    const long long n = number(p, 2);
    const long long m = number(p, 3);
    if (n < 0 || n > 50'000'000 || m < 0) fail(p, "bad vertex or edge count");
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw InputError("header announces " + std::to_string(m) + " entries, found " +
                         std::to_string(lines.size() - 1));
    return {static_cast<Vertex>(n), m};
}

}  // namespace

Graph read_graph(std::istream& in) {
    const auto lines = data_lines(in);
    const auto [n, m] = header(lines, "edge");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens[0] != "e") fail(l, "expected an 'e' line");
        expect_fields(l, 3);
        const Vertex u = vertex(l, 1, n);
        const Vertex v = vertex(l, 2, n);
        if (u == v) fail(l, "self-loop");
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

Coloring read_coloring(std::istream& in, Vertex n) {
    std::vector<Color> colors(n, -1);
    for (const Line& l : data_lines(in)) {
        if (l.tokens[0] != "v") fail(l, "expected a 'v' line");
        expect_fields(l, 3);
        const Vertex v = vertex(l, 1, n);
        const long long c = number(l, 2);
        if (c < 1 || c > 1'000'000'000) fail(l, "color must be a positive integer");
        if (colors[v] >= 0) fail(l, "vertex " + std::to_string(v + 1) + " colored twice");
        colors[v] = static_cast<Color>(c - 1);
    }
    for (Vertex v = 0; v < n; ++v)
        if (colors[v] < 0) throw InputError("vertex " + std::to_string(v + 1) + " has no color");
    return Coloring(std::move(colors));
}

Hypergraph read_hypergraph(std::istream& in) {
    const auto lines = data_lines(in);
    const auto [n, m] = header(lines, "hyper");
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens[0] != "h") fail(l, "expected an 'h' line");
        std::vector<Vertex> e;
        for (std::size_t j = 1; j < l.tokens.size(); ++j) e.push_back(vertex(l, j, n));
        edges.push_back(std::move(e));
    }
    return Hypergraph(n, std::move(edges));
}

construct::IntervalSet read_intervals(std::istream& in, Vertex n) {
    construct::IntervalSet out(n);
    std::vector<char> seen(n, 0);
    for (const Line& l : data_lines(in)) {
        if (l.tokens[0] != "i") fail(l, "expected an 'i' line");
        expect_fields(l, 4);
        const Vertex v = vertex(l, 1, n);
        if (seen[v]) fail(l, "vertex " + std::to_string(v + 1) + " has two intervals");
        seen[v] = 1;
        out[v] = {number(l, 2), number(l, 3)};
    }
    for (Vertex v = 0; v < n; ++v)
        if (!seen[v]) throw InputError("vertex " + std::to_string(v + 1) + " has no interval");
    return out;
}

std::vector<Vertex> read_order(std::istream& in, Vertex n) {
    const auto lines = data_lines(in);
    if (lines.size() != 1 && !(lines.empty() && n == 0)) throw InputError("order must be a single line");
    std::vector<Vertex> order;
    if (!lines.empty())
        for (std::size_t i = 0; i < lines[0].tokens.size(); ++i) order.push_back(vertex(lines[0], i, n));
    return order;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_coloring(std::ostream& out, const Coloring& c) {
    for (Vertex v = 0; v < c.size(); ++v) out << "v " << v + 1 << ' ' << c[v] + 1 << '\n';
}

void write_intervals(std::ostream& out, const construct::IntervalSet& iv) {
    for (std::size_t v = 0; v < iv.size(); ++v) out << "i " << v + 1 << ' ' << iv[v].a << ' ' << iv[v].b << '\n';
}

void write_order(std::ostream& out, const std::vector<Vertex>& order) {
    for (std::size_t i = 0; i < order.size(); ++i) out << (i ? " " : "") << order[i] + 1;
    out << '\n';
}

void write_cotree(std::ostream& out, const construct::Cotree& tree) {
    if (tree.root < 0) return;
    // Renumber so that the root is node 1 and children follow in BFS order.
    std::vector<int> id(tree.nodes.size(), 0);
    std::vector<int> queue{tree.root};
    id[tree.root] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int ch : tree.nodes[queue[head]].children) {
            id[ch] = static_cast<int>(queue.size()) + 1;
            queue.push_back(ch);
        }
    for (int x : queue) {
        const auto& node = tree.nodes[x];
        out << "t " << id[x];
        switch (node.kind) {
            case construct::CotreeKind::leaf: out << " leaf " << node.vertex + 1; break;
            case construct::CotreeKind::disjoint_union: out << " union"; break;
            case construct::CotreeKind::join: out << " join"; break;
        }
        for (int ch : node.children) out << ' ' << id[ch];
        out << '\n';
    }
}

}  // namespace lidcolor::cli
