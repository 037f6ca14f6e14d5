#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "curlgraph/graph.hpp"

namespace curlgraph {

// Short-form graph6: one byte n + 63, then the upper triangle of the
// adjacency matrix in column order (0,1),(0,2),(1,2),(0,3),... packed
// big-endian six bits per byte, each data byte offset by 63, the last byte
// zero-padded. Only the single-byte size form (n <= 62) is handled.

class Graph6Error : public std::runtime_error {
public:
    enum class Kind {
        truncated,          // fewer bytes than the declared size requires
        byte_out_of_range,  // byte outside [63,126]
        trailing_garbage,   // more bytes than the declared size requires
        unsupported_size,   // multi-byte size prefix '~'
    };

    Graph6Error(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

Graph parse_graph6(std::string_view text);

// Throws std::invalid_argument for graphs on more than 62 vertices.
std::string to_graph6(const Graph& g);

// One graph per line; blank lines and lines starting with '#' are skipped.
// Parse failures carry the 1-based line number in the message.
std::vector<Graph> load_graph6_lines(std::istream& in);

}  // namespace curlgraph
