#include "curlgraph/enumerate.hpp"

#include <stdexcept>
#include <string>

namespace curlgraph {

LabeledGraphEnumerator::LabeledGraphEnumerator(int n, bool connected_only)
    : n_(n), connected_only_(connected_only) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("enumerate: n must be in [1,7], got " + std::to_string(n));
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs_.push_back({u, v});
    end_ = 1ULL << pairs_.size();
}

std::optional<Graph> LabeledGraphEnumerator::next() {
    while (mask_ < end_) {
        const unsigned long long m = mask_++;
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < pairs_.size(); ++i)
            if (m >> i & 1) edges.push_back(pairs_[i]);
        Graph g(n_, std::move(edges));
        if (!connected_only_ || is_connected(g)) return g;
    }
    return std::nullopt;
}

}  // namespace curlgraph
