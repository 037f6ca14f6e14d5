#include "curlgraph/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace curlgraph {

namespace {

void check_vertex(int v, int n) {
    if (v < 0 || v >= n)
        throw std::invalid_argument("vertex " + std::to_string(v) + " outside [0," +
                                    std::to_string(n) + ")");
}

}  // namespace

Graph::Graph(int n) : n_(n) {
    if (n < 0)
        throw std::invalid_argument("vertex count must be non-negative");
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : Graph(n) {
    for (auto& [u, v] : edges) {
        check_vertex(u, n_);
        check_vertex(v, n_);
        if (u == v)
            throw std::invalid_argument("self loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::pair{u, v});
}

void Graph::add_edge(int u, int v) {
    check_vertex(u, n_);
    check_vertex(v, n_);
    if (u == v)
        throw std::invalid_argument("self loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    const std::pair e{u, v};
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_, 0);
    for (const auto& [u, v] : edges_) {
        ++d[u];
        ++d[v];
    }
    return d;
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(n_);
    for (const auto& [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

SymbolSequence degree_sequence(const Graph& g) {
    const auto d = g.degrees();
    SymbolSequence s(d.begin(), d.end());
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
}

IdentityFactorization degree_spectrum(const Graph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("degree_spectrum: graph has no vertices");
    return identity_factorize(degree_sequence(g));
}

long long graph_cn(const Graph& g) {
    long long best = 0;
    for (const auto& run : degree_spectrum(g)) best = std::max(best, run.multiplicity);
    return best;
}

long long graph_cnc(const Graph& g) {
    long long prod = 1;
    for (const auto& run : degree_spectrum(g)) prod *= run.multiplicity;
    return prod;
}

long long graph_ic(const Graph& g) {
    return static_cast<long long>(degree_spectrum(g).size());
}

bool is_regular(const Graph& g) {
    const auto d = g.degrees();
    if (d.empty()) return true;
    return std::all_of(d.begin(), d.end(), [&](int x) { return x == d.front(); });
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    const auto adj = g.adjacency();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == n;
}

}  // namespace curlgraph
