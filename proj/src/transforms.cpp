#include "curlgraph/transforms.hpp"

#include <numeric>
#include <stdexcept>

namespace curlgraph {

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

Graph line_graph(const Graph& g) {
    const int m = g.edge_count();
    if (m == 0)
        throw std::invalid_argument("line_graph: graph has no edges");
    const auto& es = g.edges();
    Graph out(m);
    for (int i = 0; i < m; ++i) {
        const auto [a, b] = es[i];
        for (int j = i + 1; j < m; ++j) {
            const auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) out.add_edge(i, j);
        }
    }
    return out;
}

Graph subdivision(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    Graph out(n + m);
    for (int i = 0; i < m; ++i) {
        out.add_edge(g.edges()[i].first, n + i);
        out.add_edge(g.edges()[i].second, n + i);
    }
    return out;
}

Graph super_subdivision(const Graph& g, const SuperSubdivisionSpec& spec) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (static_cast<int>(spec.multiplicities.size()) != m)
        throw std::invalid_argument("super_subdivision: expected " + std::to_string(m) +
                                    " multiplicities, got " +
                                    std::to_string(spec.multiplicities.size()));
    for (int mi : spec.multiplicities)
        if (mi < 1)
            throw std::invalid_argument("super_subdivision: multiplicities must be >= 1");

    const int total = std::accumulate(spec.multiplicities.begin(), spec.multiplicities.end(), 0);
    Graph out(n + total);
    int next = n;
    for (int i = 0; i < m; ++i) {
        const auto [u, v] = g.edges()[i];
        for (int t = 0; t < spec.multiplicities[i]; ++t, ++next) {
            out.add_edge(u, next);
            out.add_edge(v, next);
        }
    }
    return out;
}

Graph shadow_graph(const Graph& g) {
    const int n = g.vertex_count();
    Graph out(2 * n);
    for (const auto& [u, v] : g.edges()) {
        out.add_edge(u, v);
        out.add_edge(u, n + v);
        out.add_edge(v, n + u);
    }
    return out;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    if (parts.empty())
        throw std::invalid_argument("disjoint_union: no graphs given");
    int n = 0;
    for (const auto& p : parts) n += p.vertex_count();
    Graph out(n);
    int base = 0;
    for (const auto& p : parts) {
        for (const auto& [u, v] : p.edges()) out.add_edge(base + u, base + v);
        base += p.vertex_count();
    }
    return out;
}

}  // namespace curlgraph
