#pragma once

#include <vector>

#include "curlgraph/graph.hpp"

namespace curlgraph {

// One multiplicity per edge of the source graph, aligned with edges().
struct SuperSubdivisionSpec {
    std::vector<int> multiplicities;
};

Graph complement(const Graph& g);

// Vertex i of the result is edge i of g, adjacent when the edges share an
// endpoint. Requires at least one edge.
Graph line_graph(const Graph& g);

// Edge i of g becomes a two-edge path through new vertex n + i.
Graph subdivision(const Graph& g);

// Edge i of g becomes a K_{2,m_i} between its endpoints; new vertices are
// numbered from n onward in edge order. Spec length must equal edge_count()
// and every multiplicity must be >= 1.
Graph super_subdivision(const Graph& g, const SuperSubdivisionSpec& spec);

// Adds vertex n + v adjacent to the neighbours of v (not to v), for every v.
Graph shadow_graph(const Graph& g);

// Parts keep their internal labels, offset by the vertex counts before them.
// Requires at least one part.
Graph disjoint_union(const std::vector<Graph>& parts);

}  // namespace curlgraph
