#include "curlgraph/curling.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace curlgraph {

namespace {

void require_valid(const SymbolSequence& s, const char* op) {
    if (s.empty())
        throw std::invalid_argument(std::string(op) + ": empty sequence");
    for (Symbol v : s)
        if (v < 0)
            throw std::invalid_argument(std::string(op) + ": negative symbol " + std::to_string(v));
}

}  // namespace

CurlResult curling_number(const SymbolSequence& s) {
    require_valid(s, "curling_number");
    const std::size_t n = s.size();

    CurlResult best;
    best.k = 1;
    best.witness = {n - 1, 1, 1};

    // For block length p the longest run of matches s[i] == s[i+p] reaching
    // the tail makes the last run+p symbols p-periodic, so the best count at
    // p is 1 + run/p. Scanning p upward keeps the smallest block on ties;
    // the prefix is then forced, which settles the remaining tie rule.
    for (std::size_t p = 1; 2 * p <= n; ++p) {
        std::size_t run = 0;
        for (std::size_t i = n - p; i-- > 0;) {
            if (s[i] != s[i + p]) break;
            ++run;
        }
        const long long k = 1 + static_cast<long long>(run / p);
        if (k > best.k) {
            best.k = k;
            best.witness.prefix_len = n - static_cast<std::size_t>(k) * p;
            best.witness.block_len = p;
            best.witness.count = k;
        }
    }
    return best;
}

long long curling_number_oracle(const SymbolSequence& s) {
    require_valid(s, "curling_number_oracle");
    const std::size_t n = s.size();
    long long best = 1;
    for (std::size_t p = 1; p <= n; ++p) {
        const auto block = s.end() - static_cast<std::ptrdiff_t>(p);
        long long k = 1;
        while (static_cast<std::size_t>(k + 1) * p <= n &&
               std::equal(block, s.end(),
                          s.end() - static_cast<std::ptrdiff_t>(k + 1) * static_cast<std::ptrdiff_t>(p))) {
            ++k;
        }
        best = std::max(best, k);
    }
    return best;
}

ExtendResult extend_until_one(SymbolSequence s, long long max_steps) {
    require_valid(s, "extend_until_one");
    if (max_steps < 0)
        throw std::invalid_argument("extend_until_one: negative step budget");

    ExtendResult out;
    while (out.steps < max_steps) {
        const long long k = curling_number(s).k;
        s.push_back(k);
        ++out.steps;
        if (k == 1) {
            out.reached_one = true;
            break;
        }
    }
    out.sequence = std::move(s);
    return out;
}

IdentityFactorization identity_factorize(const SymbolSequence& s) {
    require_valid(s, "identity_factorize");
    SymbolSequence sorted = s;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());

    IdentityFactorization runs;
    for (Symbol v : sorted) {
        if (!runs.empty() && runs.back().value == v)
            ++runs.back().multiplicity;
        else
            runs.push_back({v, 1});
    }
    return runs;
}

}  // namespace curlgraph
