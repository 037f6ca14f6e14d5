#pragma once

#include <utility>
#include <vector>

#include "curlgraph/curling.hpp"

namespace curlgraph {

// Simple undirected graph on vertices 0..n-1. The edge list stays sorted
// lexicographically with u < v; edge indices used by the transforms refer to
// positions in edges().
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);  // no-op when the edge is already present

    std::vector<int> degrees() const;
    std::vector<std::vector<int>> adjacency() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

// Degrees in non-ascending order.
SymbolSequence degree_sequence(const Graph& g);

// Runs of the non-ascending degree sequence; requires at least one vertex.
IdentityFactorization degree_spectrum(const Graph& g);

long long graph_cn(const Graph& g);   // largest run multiplicity
long long graph_cnc(const Graph& g);  // product of run multiplicities
long long graph_ic(const Graph& g);   // number of runs

// Vertex-free and single-vertex graphs count as regular and connected.
bool is_regular(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace curlgraph
