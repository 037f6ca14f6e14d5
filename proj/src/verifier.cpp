#include "curlgraph/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace curlgraph {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::precondition_skipped: return "precondition-skipped";
    }
    return "?";
}

std::string format_spectrum(const IdentityFactorization& runs) {
    std::string out;
    for (const auto& r : runs) {
        if (!out.empty()) out += ' ';
        out += std::to_string(r.value) + '^' + std::to_string(r.multiplicity);
    }
    return out;
}

namespace {

ClaimReport skipped(const char* claim, std::string instance, std::string note) {
    ClaimReport r;
    r.claim_id = claim;
    r.instance = std::move(instance);
    r.verdict = Verdict::precondition_skipped;
    r.note = std::move(note);
    return r;
}

ClaimReport make(const char* claim, std::string instance, std::vector<long long> expected,
                 std::vector<long long> actual, std::string witness) {
    ClaimReport r;
    r.claim_id = claim;
    r.instance = std::move(instance);
    r.expected = std::move(expected);
    r.actual = std::move(actual);
    r.verdict = r.expected == r.actual ? Verdict::holds : Verdict::fails;
    r.witness = std::move(witness);
    return r;
}

std::string join(const std::vector<int>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out + "]";
}

}  // namespace

ShadowEta compute_shadow_eta(const Graph& g) {
    const auto spectrum = degree_spectrum(g);
    long long max_mult = 0;
    for (const auto& run : spectrum) max_mult = std::max(max_mult, run.multiplicity);

    ShadowEta out;
    const auto degs = g.degrees();
    for (const auto& run : spectrum) {
        if (run.multiplicity != max_mult) continue;
        out.most_repeating_degrees.push_back(run.value);
        long long count = 0;
        for (int d : degs)
            if (d == 2 * run.value) ++count;
        out.eta.push_back(count);
    }
    return out;
}

ClaimReport verify_regular(const Graph& g, std::string instance) {
    if (g.vertex_count() == 0) return skipped("regular-compound", std::move(instance), "empty graph");
    if (!is_regular(g)) return skipped("regular-compound", std::move(instance), "not regular");
    return make("regular-compound", std::move(instance), {graph_cn(g)}, {graph_cnc(g)},
                "G=" + format_spectrum(degree_spectrum(g)));
}

ClaimReport verify_complement(const Graph& g, std::string instance) {
    if (g.vertex_count() == 0)
        return skipped("complement-invariance", std::move(instance), "empty graph");
    const Graph gc = complement(g);
    return make("complement-invariance", std::move(instance), {graph_cn(g), graph_cnc(g)},
                {graph_cn(gc), graph_cnc(gc)},
                "G=" + format_spectrum(degree_spectrum(g)) +
                    "; complement=" + format_spectrum(degree_spectrum(gc)));
}

ClaimReport verify_line_regular(const Graph& g, std::string instance) {
    if (g.vertex_count() == 0)
        return skipped("line-regular", std::move(instance), "empty graph");
    if (!is_regular(g)) return skipped("line-regular", std::move(instance), "not regular");
    if (g.edge_count() == 0) return skipped("line-regular", std::move(instance), "no edges");
    const Graph lg = line_graph(g);
    return make("line-regular", std::move(instance), {g.edge_count()}, {graph_cn(lg)},
                "G=" + format_spectrum(degree_spectrum(g)) +
                    "; L(G)=" + format_spectrum(degree_spectrum(lg)));
}

ClaimReport verify_line_bounds(const Graph& g, std::string instance) {
    if (g.vertex_count() == 0)
        return skipped("line-bounds", std::move(instance), "empty graph");
    if (!is_regular(g)) return skipped("line-bounds", std::move(instance), "not regular");
    if (g.edge_count() == 0) return skipped("line-bounds", std::move(instance), "no edges");
    if (!is_connected(g)) return skipped("line-bounds", std::move(instance), "not connected");

    const long long n = g.vertex_count();
    const Graph lg = line_graph(g);
    const long long sum = graph_cn(g) + graph_cn(lg);

    ClaimReport r;
    r.claim_id = "line-bounds";
    r.instance = std::move(instance);
    r.expected = {2 * n - 1, n * (n + 1) / 2};
    r.actual = {sum};
    r.verdict = (r.expected[0] <= sum && sum <= r.expected[1]) ? Verdict::holds : Verdict::fails;
    r.witness = "G=" + format_spectrum(degree_spectrum(g)) +
                "; L(G)=" + format_spectrum(degree_spectrum(lg));
    return r;
}

ClaimReport verify_wheel_line(int n, std::string instance) {
    const Graph w = generate({Family::wheel, {n}});
    const Graph lg = line_graph(w);
    auto r = make("wheel-line", std::move(instance),
                  {static_cast<long long>(n), static_cast<long long>(n) * n},
                  {graph_cn(lg), graph_cnc(lg)},
                  "W=" + format_spectrum(degree_spectrum(w)) +
                      "; L(W)=" + format_spectrum(degree_spectrum(lg)));
    if (graph_ic(lg) < 2) r.note = "line graph degree values collide";
    return r;
}

ClaimReport verify_helm_line(int n, std::string instance) {
    const Graph h = generate({Family::helm, {n}});
    const Graph lg = line_graph(h);
    auto r = make("helm-line", std::move(instance),
                  {static_cast<long long>(n), static_cast<long long>(n) * n * n},
                  {graph_cn(lg), graph_cnc(lg)},
                  "H=" + format_spectrum(degree_spectrum(h)) +
                      "; L(H)=" + format_spectrum(degree_spectrum(lg)));
    if (graph_ic(lg) < 3) r.note = "line graph degree values collide";
    return r;
}

ClaimReport verify_subdivision(const Graph& g, std::string instance) {
    if (g.vertex_count() == 0)
        return skipped("subdivision-formula", std::move(instance), "empty graph");
    if (!is_connected(g))
        return skipped("subdivision-formula", std::move(instance), "not connected");

    long long deg2 = 0;
    for (int d : g.degrees())
        if (d == 2) ++deg2;
    const Graph s = subdivision(g);
    return make("subdivision-formula", std::move(instance), {g.edge_count() + deg2},
                {graph_cn(s)},
                "G=" + format_spectrum(degree_spectrum(g)) +
                    "; S(G)=" + format_spectrum(degree_spectrum(s)));
}

ClaimReport verify_super_subdivision(const Graph& g, const SuperSubdivisionSpec& spec,
                                     std::string instance) {
    if (g.vertex_count() == 0)
        return skipped("super-subdivision-formula", std::move(instance), "empty graph");
    if (g.edge_count() == 0)
        return skipped("super-subdivision-formula", std::move(instance), "no edges");

    const Graph ss = super_subdivision(g, spec);
    long long total = 0;
    for (int mi : spec.multiplicities) total += mi;

    auto r = make("super-subdivision-formula", std::move(instance), {total}, {graph_cn(ss)},
                  "G=" + format_spectrum(degree_spectrum(g)) + "; m=" +
                      join(spec.multiplicities) + "; G'=" + format_spectrum(degree_spectrum(ss)));
    const bool uniform = std::all_of(spec.multiplicities.begin(), spec.multiplicities.end(),
                                     [&](int mi) { return mi == spec.multiplicities[0]; });
    if (uniform)
        r.note = "uniform m=" + std::to_string(spec.multiplicities[0]) +
                 "; m*eps=" + std::to_string(total);
    return r;
}

ClaimReport verify_shadow(const Graph& g, std::string instance) {
    if (g.vertex_count() == 0)
        return skipped("shadow-formula", std::move(instance), "empty graph");

    const ShadowEta eta = compute_shadow_eta(g);
    const long long cn = graph_cn(g);
    const Graph sh = shadow_graph(g);
    const long long actual = graph_cn(sh);

    // The claim pins no tie rule; it holds when any maximizing degree works.
    std::size_t match = eta.eta.size();
    for (std::size_t i = 0; i < eta.eta.size(); ++i) {
        if (cn + eta.eta[i] == actual) {
            match = i;
            break;
        }
    }

    ClaimReport r;
    r.claim_id = "shadow-formula";
    r.instance = std::move(instance);
    r.expected = {cn + (match < eta.eta.size() ? eta.eta[match] : eta.eta[0])};
    r.actual = {actual};
    r.verdict = match < eta.eta.size() ? Verdict::holds : Verdict::fails;
    r.witness = "G=" + format_spectrum(degree_spectrum(g)) +
                "; shadow=" + format_spectrum(degree_spectrum(sh));
    if (eta.most_repeating_degrees.size() > 1) {
        r.note = "most repeating degree ambiguous:";
        for (std::size_t i = 0; i < eta.eta.size(); ++i)
            r.note += " " + std::to_string(eta.most_repeating_degrees[i]) + "->" +
                      std::to_string(cn + eta.eta[i]);
    }
    return r;
}

ClaimReport verify_union(const std::vector<Graph>& parts, std::string instance) {
    if (parts.empty())
        throw std::invalid_argument("verify_union: no graphs given");
    for (const auto& p : parts)
        if (p.vertex_count() == 0)
            return skipped("union-formula", std::move(instance), "empty component");

    // Expected from component spectra alone: when no degree value is shared,
    // runs cannot merge and the component maxima stand; otherwise equal
    // degrees merge and their multiplicities add.
    std::map<Symbol, long long> total;
    std::map<Symbol, int> seen_in;
    long long max_cn = 0;
    std::string witness;
    for (const auto& p : parts) {
        for (const auto& run : degree_spectrum(p)) {
            total[run.value] += run.multiplicity;
            ++seen_in[run.value];
        }
        max_cn = std::max(max_cn, graph_cn(p));
        if (!witness.empty()) witness += "; ";
        witness += "G" + std::to_string(&p - parts.data() + 1) + "=" +
                   format_spectrum(degree_spectrum(p));
    }
    const bool shared = std::any_of(seen_in.begin(), seen_in.end(),
                                    [](const auto& kv) { return kv.second > 1; });
    long long expected = max_cn;
    if (shared) {
        expected = 0;
        for (const auto& [value, mult] : total) expected = std::max(expected, mult);
    }

    const Graph u = disjoint_union(parts);
    witness += "; union=" + format_spectrum(degree_spectrum(u));
    return make("union-formula", std::move(instance), {expected}, {graph_cn(u)},
                std::move(witness));
}

namespace {

uint64_t splitmix64(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

SuperSubdivisionSpec draw_multiplicities(const Graph& g, uint64_t seed, std::size_t index) {
    uint64_t state = seed ^ (0xa0761d6478bd642fULL * (index + 1));
    SuperSubdivisionSpec spec;
    spec.multiplicities.reserve(static_cast<std::size_t>(g.edge_count()));
    for (int i = 0; i < g.edge_count(); ++i)
        spec.multiplicities.push_back(1 + static_cast<int>(splitmix64(state) & 3));
    return spec;
}

}  // namespace

const std::vector<std::string>& known_claims() {
    static const std::vector<std::string> ids = {
        "complement-invariance",
        "helm-line",
        "line-bounds",
        "line-regular",
        "regular-compound",
        "shadow-formula",
        "subdivision-formula",
        "super-subdivision-formula",
        "union-formula",
        "wheel-line",
    };
    return ids;
}

SuiteResult run_suite(const std::vector<CatalogEntry>& catalog,
                      const std::vector<std::string>& claims, const SuiteOptions& options) {
    std::vector<std::string> selected = claims;
    std::sort(selected.begin(), selected.end());
    selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
    for (const auto& id : selected) {
        const auto& known = known_claims();
        if (!std::binary_search(known.begin(), known.end(), id))
            throw std::invalid_argument("unknown claim id: " + id);
    }

    auto run_entry = [&](std::size_t idx) {
        std::vector<ClaimReport> out;
        const CatalogEntry& e = catalog[idx];
        for (const auto& id : selected) {
            if (id == "complement-invariance") {
                out.push_back(verify_complement(e.graph, e.label));
            } else if (id == "helm-line") {
                if (e.family && e.family->family == Family::helm)
                    out.push_back(verify_helm_line(e.family->params.at(0), e.label));
            } else if (id == "line-bounds") {
                out.push_back(verify_line_bounds(e.graph, e.label));
            } else if (id == "line-regular") {
                out.push_back(verify_line_regular(e.graph, e.label));
            } else if (id == "regular-compound") {
                out.push_back(verify_regular(e.graph, e.label));
            } else if (id == "shadow-formula") {
                out.push_back(verify_shadow(e.graph, e.label));
            } else if (id == "subdivision-formula") {
                out.push_back(verify_subdivision(e.graph, e.label));
            } else if (id == "super-subdivision-formula") {
                out.push_back(verify_super_subdivision(
                    e.graph, draw_multiplicities(e.graph, options.seed, idx), e.label));
            } else if (id == "union-formula") {
                if (idx > 0)
                    out.push_back(verify_union(
                        {catalog[idx - 1].graph, e.graph},
                        "union(" + catalog[idx - 1].label + "," + e.label + ")"));
            } else if (id == "wheel-line") {
                if (e.family && e.family->family == Family::wheel)
                    out.push_back(verify_wheel_line(e.family->params.at(0), e.label));
            }
        }
        return out;
    };

    std::vector<std::vector<ClaimReport>> slots(catalog.size());

    int threads = options.threads > 0 ? options.threads
                                      : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    if (static_cast<std::size_t>(threads) > catalog.size())
        threads = static_cast<int>(catalog.size() ? catalog.size() : 1);

    if (threads == 1) {
        for (std::size_t i = 0; i < catalog.size(); ++i) slots[i] = run_entry(i);
    } else {
        std::atomic<std::size_t> cursor{0};
        std::exception_ptr failure;
        std::mutex failure_lock;
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::size_t i; (i = cursor.fetch_add(1)) < catalog.size();) {
                    try {
                        slots[i] = run_entry(i);
                    } catch (...) {
                        std::lock_guard lock(failure_lock);
                        if (!failure) failure = std::current_exception();
                        return;
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    SuiteResult result;
    for (auto& slot : slots)
        for (auto& report : slot) {
            switch (report.verdict) {
                case Verdict::holds: ++result.holds; break;
                case Verdict::fails: ++result.fails; break;
                case Verdict::precondition_skipped: ++result.skipped; break;
            }
            result.reports.push_back(std::move(report));
        }
    return result;
}

}  // namespace curlgraph
