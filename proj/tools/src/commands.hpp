#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lidcolor::cli {

enum class Format { text, json };

struct Streams {
    std::ostream& out;
    std::ostream& err;
    Format format = Format::text;
};

// Every command returns the process exit code: 0 success / yes,
// 1 negative answer, 2 usage, parse or precondition error.

int cmd_verify(const Streams& io, const std::string& graph_file, const std::string& coloring_file,
               const std::string& mode);

int cmd_chi(const Streams& io, const std::string& graph_file, std::optional<int> max_colors);

struct ColorOptions {
    std::string cls = "auto";
    std::vector<std::string> factors;  ///< product: exactly two graph files
    std::string order;                 ///< ktree
    std::string intervals;             ///< interval
    std::string outer;                 ///< outerplanar
};
int cmd_color(const Streams& io, const std::string& graph_file, const ColorOptions& opt);

struct GenOptions {
    std::string family;
    std::vector<long long> params;
    std::uint64_t seed = 1;
    std::string cert;  ///< certificate output file, empty for none
};
int cmd_gen(const Streams& io, const GenOptions& opt);

struct ReduceOptions {
    std::string hypergraph_file;
    int girth = 4;
    std::string lift;  ///< "", "forward" or "backward"
    std::string coloring_file;
};
int cmd_reduce(const Streams& io, const ReduceOptions& opt);

int cmd_decide3(const Streams& io, const std::string& graph_file);

/// Parses the command line and dispatches; used by main() and by the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lidcolor::cli
