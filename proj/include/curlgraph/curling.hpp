#pragma once

#include <cstddef>
#include <vector>

namespace curlgraph {

using Symbol = long long;
using SymbolSequence = std::vector<Symbol>;  // finite, non-negative entries

// s = prefix . block^count with block_len >= 1, count >= 1 and
// prefix_len + block_len * count == s.size().
struct CurlDecomposition {
    std::size_t prefix_len = 0;
    std::size_t block_len = 1;
    long long count = 1;
    bool operator==(const CurlDecomposition&) const = default;
};

struct CurlResult {
    long long k = 1;
    CurlDecomposition witness;
};

struct SymbolRun {
    Symbol value = 0;
    long long multiplicity = 0;
    bool operator==(const SymbolRun&) const = default;
};

// Runs of the non-ascending rearrangement; values strictly decreasing,
// multiplicities sum to the sequence length.
using IdentityFactorization = std::vector<SymbolRun>;

struct ExtendResult {
    bool reached_one = false;
    long long steps = 0;         // appends performed
    SymbolSequence sequence;     // input followed by every appended value
};

// Greatest k such that s = X . Y^k over all decompositions with Y non-empty.
// Witness ties break toward the smallest block_len, then smallest prefix_len.
CurlResult curling_number(const SymbolSequence& s);

// Same value by verbatim block comparison over every (block, count) pair.
// Shares no scanning logic with curling_number.
long long curling_number_oracle(const SymbolSequence& s);

// Appends curling_number(s).k until a 1 is appended or max_steps appends
// have been made, whichever comes first.
ExtendResult extend_until_one(SymbolSequence s, long long max_steps);

IdentityFactorization identity_factorize(const SymbolSequence& s);

}  // namespace curlgraph
