#pragma once

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "lidcolor/coloring.hpp"
#include "lidcolor/construct.hpp"
#include "lidcolor/graph.hpp"
#include "lidcolor/hypergraph.hpp"

// Text formats. Files use 1-based vertex ids and colors; everything in
// memory is 0-based. Lines starting with 'c' are comments everywhere.
//
//   graph        p edge <n> <m>, then m lines  e <u> <v>
//   coloring     v <vertex> <color>, one line per vertex
//   hypergraph   p hyper <n> <m>, then m lines  h <v1> <v2> ...
//   intervals    i <vertex> <a> <b>, one line per vertex
//   order        one line of space-separated vertex ids
namespace lidcolor::cli {

Graph read_graph(std::istream& in);
Coloring read_coloring(std::istream& in, Vertex n);
Hypergraph read_hypergraph(std::istream& in);
construct::IntervalSet read_intervals(std::istream& in, Vertex n);
std::vector<Vertex> read_order(std::istream& in, Vertex n);

void write_graph(std::ostream& out, const Graph& g);
void write_coloring(std::ostream& out, const Coloring& c);
void write_intervals(std::ostream& out, const construct::IntervalSet& iv);
void write_order(std::ostream& out, const std::vector<Vertex>& order);
/// Nodes as `t <id> leaf <vertex>` or `t <id> union|join <children...>`, root first.
void write_cotree(std::ostream& out, const construct::Cotree& tree);

/// Opens `path` ("-" is standard input) and runs `reader` on it; parse
/// errors are reported as InputError prefixed with the file name.
template <class Reader>
auto read_file(const std::string& path, Reader reader) -> decltype(reader(std::declval<std::istream&>())) {
    try {
        if (path == "-") return reader(std::cin);
        std::ifstream in(path);
        if (!in) throw InputError("cannot open file");
        return reader(in);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

}  // namespace lidcolor::cli
