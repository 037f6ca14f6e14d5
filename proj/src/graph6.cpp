#include "curlgraph/graph6.hpp"

#include <istream>

namespace curlgraph {

namespace {

std::size_t data_bytes(int n) {
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.empty())
        throw Graph6Error(Graph6Error::Kind::truncated, "graph6: empty input");
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto b = static_cast<unsigned char>(text[i]);
        if (b < 63 || b > 126)
            throw Graph6Error(Graph6Error::Kind::byte_out_of_range,
                              "graph6: byte " + std::to_string(b) + " at position " +
                                  std::to_string(i) + " outside [63,126]");
    }
    if (text[0] == '~')
        throw Graph6Error(Graph6Error::Kind::unsupported_size,
                          "graph6: multi-byte size form not handled (n > 62)");

    const int n = text[0] - 63;
    const std::size_t need = 1 + data_bytes(n);
    if (text.size() < need)
        throw Graph6Error(Graph6Error::Kind::truncated,
                          "graph6: need " + std::to_string(need) + " bytes for n=" +
                              std::to_string(n) + ", got " + std::to_string(text.size()));
    if (text.size() > need)
        throw Graph6Error(Graph6Error::Kind::trailing_garbage,
                          "graph6: " + std::to_string(text.size() - need) +
                              " extra bytes after n=" + std::to_string(n) + " data");

    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if ((text[1 + bit / 6] - 63) >> (5 - bit % 6) & 1) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62)
        throw std::invalid_argument("to_graph6: " + std::to_string(n) +
                                    " vertices exceeds the single-byte size form (62)");

    std::string out(1 + data_bytes(n), 63);
    out[0] = static_cast<char>(63 + n);
    for (const auto& [u, v] : g.edges()) {
        // column-order rank of cell (u, v), u < v
        const std::size_t bit = static_cast<std::size_t>(v) * (v - 1) / 2 + u;
        out[1 + bit / 6] += static_cast<char>(1 << (5 - bit % 6));
    }
    return out;
}

std::vector<Graph> load_graph6_lines(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        try {
            graphs.push_back(parse_graph6(line));
        } catch (const Graph6Error& e) {
            throw Graph6Error(e.kind(), "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return graphs;
}

}  // namespace curlgraph
