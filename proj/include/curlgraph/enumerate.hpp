#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "curlgraph/graph.hpp"

namespace curlgraph {

// Streams every labeled graph on exactly n vertices (1 <= n <= 7) in
// ascending edge-bitmask order; bit i of the mask selects pair i in the
// column order (0,1),(0,2),(1,2),(0,3),... The first graph is edgeless,
// the last is complete.
class LabeledGraphEnumerator {
public:
    explicit LabeledGraphEnumerator(int n, bool connected_only = false);

    std::optional<Graph> next();

private:
    int n_ = 0;
    bool connected_only_ = false;
    unsigned long long mask_ = 0;
    unsigned long long end_ = 0;
    std::vector<std::pair<int, int>> pairs_;
};

}  // namespace curlgraph
