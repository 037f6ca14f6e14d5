#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curlgraph/families.hpp"
#include "curlgraph/graph.hpp"
#include "curlgraph/transforms.hpp"

namespace curlgraph {

enum class Verdict { holds, fails, precondition_skipped };

const char* verdict_name(Verdict v);

// expected/actual hold one value for scalar claims, two for pair claims
// (line-bounds: expected = the two bounds), and none on a skip. A fails
// verdict always has both sides populated and unequal.
struct ClaimReport {
    std::string claim_id;
    std::string instance;
    std::vector<long long> expected;
    std::vector<long long> actual;
    Verdict verdict = Verdict::precondition_skipped;
    std::string witness;
    std::string note;
};

// "5^1 3^5"
std::string format_spectrum(const IdentityFactorization& runs);

// Degrees achieving the maximum run multiplicity, and for each the count of
// vertices whose degree is twice it. Degrees listed in descending order.
struct ShadowEta {
    std::vector<Symbol> most_repeating_degrees;
    std::vector<long long> eta;  // aligned with most_repeating_degrees
};

ShadowEta compute_shadow_eta(const Graph& g);

ClaimReport verify_regular(const Graph& g, std::string instance = "");
ClaimReport verify_complement(const Graph& g, std::string instance = "");
ClaimReport verify_line_regular(const Graph& g, std::string instance = "");
ClaimReport verify_line_bounds(const Graph& g, std::string instance = "");
ClaimReport verify_wheel_line(int n, std::string instance = "");
ClaimReport verify_helm_line(int n, std::string instance = "");
ClaimReport verify_subdivision(const Graph& g, std::string instance = "");
ClaimReport verify_super_subdivision(const Graph& g, const SuperSubdivisionSpec& spec,
                                     std::string instance = "");
ClaimReport verify_shadow(const Graph& g, std::string instance = "");
ClaimReport verify_union(const std::vector<Graph>& parts, std::string instance = "");

struct CatalogEntry {
    Graph graph;
    std::string label;
    std::optional<FamilySpec> family;  // set when the entry came from a family
};

struct SuiteOptions {
    std::uint64_t seed = 0;
    int threads = 0;  // 0 picks hardware concurrency
};

struct SuiteResult {
    std::vector<ClaimReport> reports;
    long long holds = 0;
    long long fails = 0;
    long long skipped = 0;
};

// Claim ids accepted by run_suite, sorted.
const std::vector<std::string>& known_claims();

// Applies each selected claim to each applicable catalog entry. Reports come
// back grouped by catalog position with claims in id order inside a position,
// independent of the thread count. wheel-line/helm-line apply only to entries
// carrying the matching family; union-formula pairs each entry with its
// predecessor; super-subdivision multiplicities derive from (seed, position).
// Unknown claim ids throw std::invalid_argument before any work starts.
SuiteResult run_suite(const std::vector<CatalogEntry>& catalog,
                      const std::vector<std::string>& claims,
                      const SuiteOptions& options = {});

}  // namespace curlgraph
