#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "curlgraph/graph.hpp"

namespace curlgraph {

enum class Family { path, cycle, complete, complete_bipartite, star, wheel, helm };

struct FamilySpec {
    Family family = Family::path;
    std::vector<int> params;
    bool operator==(const FamilySpec&) const = default;
};

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

// "wheel:5" or "complete_bipartite:2,3". Nullopt when the name is unknown or
// a parameter is not an integer.
std::optional<FamilySpec> parse_family_spec(std::string_view text);

// path:n (n>=1, vertices in a chain), cycle:n (n>=3), complete:n (n>=1),
// complete_bipartite:a,b (a,b>=1, parts 0..a-1 and a..a+b-1),
// star:n (n>=1, hub 0 with n leaves), wheel:n (n>=3, hub 0 joined to the
// cycle 1..n), helm:n (n>=3, wheel plus pendant n+i on rim vertex i).
// Throws std::invalid_argument naming the violated parameter range.
Graph generate(const FamilySpec& spec);

}  // namespace curlgraph
