#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "curlgraph/families.hpp"
#include "curlgraph/verifier.hpp"

using namespace curlgraph;

namespace {

Graph fam(const char* text) {
    return generate(*parse_family_spec(text));
}

using LL = std::vector<long long>;

}  // namespace

TEST_CASE("spectrum formatting") {
    CHECK(format_spectrum(degree_spectrum(fam("wheel:5"))) == "5^1 3^5");
    CHECK(format_spectrum(degree_spectrum(Graph(1))) == "0^1");
    CHECK(format_spectrum({}) == "");
}

TEST_CASE("regular-compound") {
    auto r = verify_regular(fam("cycle:5"), "C5");
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.expected == LL{5});
    CHECK(r.actual == LL{5});
    CHECK(r.instance == "C5");

    r = verify_regular(fam("path:3"));
    CHECK(r.verdict == Verdict::precondition_skipped);
    CHECK(r.note == "not regular");
    CHECK(r.expected.empty());

    CHECK(verify_regular(Graph(3)).verdict == Verdict::holds);  // 0-regular
    CHECK(verify_regular(Graph(0)).verdict == Verdict::precondition_skipped);

    // regular but disconnected still applies
    r = verify_regular(disjoint_union({fam("cycle:3"), fam("cycle:3")}));
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.expected == LL{6});
    CHECK(r.witness == "G=2^6");
}

TEST_CASE("complement-invariance") {
    auto r = verify_complement(fam("path:4"));
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.expected == LL{2, 4});
    CHECK(r.actual == LL{2, 4});

    r = verify_complement(fam("complete:3"));
    CHECK(r.expected == LL{3, 3});
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.witness.find("complement=0^3") != std::string::npos);

    r = verify_complement(fam("wheel:5"));
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.expected == LL{5, 5});
    CHECK(r.witness.find("complement=2^5 0^1") != std::string::npos);
}

TEST_CASE("line-regular") {
    auto r = verify_line_regular(fam("cycle:5"));
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.expected == LL{5});

    r = verify_line_regular(fam("complete:4"));
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.expected == LL{6});
    CHECK(r.actual == LL{6});

    CHECK(verify_line_regular(fam("path:3")).note == "not regular");
    CHECK(verify_line_regular(Graph(2)).note == "no edges");

    // regular but disconnected still applies
    const Graph two_edges(4, {{0, 1}, {2, 3}});
    r = verify_line_regular(two_edges);
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.expected == LL{2});
}

TEST_CASE("line-bounds") {
    auto r = verify_line_bounds(fam("complete:2"));
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.expected == LL{3, 3});  // lower bound met exactly
    CHECK(r.actual == LL{3});

    r = verify_line_bounds(fam("complete:3"));
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.expected == LL{5, 6});
    CHECK(r.actual == LL{6});  // upper bound met exactly

    r = verify_line_bounds(fam("cycle:5"));
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.expected == LL{9, 15});
    CHECK(r.actual == LL{10});

    CHECK(verify_line_bounds(Graph(4, {{0, 1}, {2, 3}})).note == "not connected");
    CHECK(verify_line_bounds(Graph(3)).note == "no edges");
    CHECK(verify_line_bounds(fam("path:3")).note == "not regular");
}

TEST_CASE("wheel-line") {
    // n=3 is the lone failure: the rim and spoke degrees coincide in L(W)
    auto r = verify_wheel_line(3);
    CHECK(r.verdict == Verdict::fails);
    CHECK(r.expected == LL{3, 9});
    CHECK(r.actual == LL{6, 6});
    CHECK(r.note == "line graph degree values collide");

    for (int n = 4; n <= 12; ++n) {
        r = verify_wheel_line(n);
        CHECK(r.verdict == Verdict::holds);
        CHECK(r.expected == LL{n, static_cast<long long>(n) * n});
        CHECK(r.note.empty());
    }
}

TEST_CASE("helm-line") {
    auto r = verify_helm_line(3);
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.expected == LL{3, 27});

    // n=4: hub and rim degrees coincide, merging two runs of L(H)
    r = verify_helm_line(4);
    CHECK(r.verdict == Verdict::fails);
    CHECK(r.expected == LL{4, 64});
    CHECK(r.actual == LL{8, 32});
    CHECK(r.note == "line graph degree values collide");
    CHECK(r.witness.find("L(H)=6^8 3^4") != std::string::npos);

    for (int n = 5; n <= 12; ++n) {
        r = verify_helm_line(n);
        CHECK(r.verdict == Verdict::holds);
        CHECK(r.expected == LL{n, static_cast<long long>(n) * n * n});
    }
}

TEST_CASE("subdivision-formula") {
    auto r = verify_subdivision(fam("path:3"));
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.expected == LL{3});  // 2 edges + 1 degree-2 vertex
    CHECK(r.actual == LL{3});

    r = verify_subdivision(fam("cycle:4"));
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.expected == LL{8});

    // the only connected failures through n=5
    r = verify_subdivision(Graph(1));
    CHECK(r.verdict == Verdict::fails);
    CHECK(r.expected == LL{0});
    CHECK(r.actual == LL{1});

    r = verify_subdivision(fam("complete:2"));
    CHECK(r.verdict == Verdict::fails);
    CHECK(r.expected == LL{1});
    CHECK(r.actual == LL{2});

    CHECK(verify_subdivision(Graph(4, {{0, 1}, {2, 3}})).verdict ==
          Verdict::precondition_skipped);
}

TEST_CASE("super-subdivision-formula") {
    auto r = verify_super_subdivision(fam("complete:2"), {{3}});
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.expected == LL{3});
    CHECK(r.note == "uniform m=3; m*eps=3");

    r = verify_super_subdivision(fam("complete:3"), {{2, 2, 2}});
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.expected == LL{6});
    CHECK(r.witness.find("m=[2,2,2]") != std::string::npos);

    // all-ones multiplicities reduce to ordinary subdivision; original
    // vertices of C3 land on degree 2 and merge with the new vertices
    r = verify_super_subdivision(fam("cycle:3"), {{1, 1, 1}});
    CHECK(r.verdict == Verdict::fails);
    CHECK(r.expected == LL{3});
    CHECK(r.actual == LL{6});
    CHECK(r.note == "uniform m=1; m*eps=3");

    // a pendant edge with m=2 leaves its endpoint at degree 2, merging runs
    r = verify_super_subdivision(fam("star:3"), {{2, 1, 1}});
    CHECK(r.verdict == Verdict::fails);
    CHECK(r.expected == LL{4});
    CHECK(r.actual == LL{5});
    CHECK(r.note.empty());

    CHECK(verify_super_subdivision(Graph(2), {{}}).note == "no edges");
}

TEST_CASE("shadow-formula") {
    auto eta = compute_shadow_eta(fam("path:4"));
    REQUIRE(eta.most_repeating_degrees == std::vector<Symbol>{2, 1});
    CHECK(eta.eta == LL{0, 2});

    auto r = verify_shadow(fam("path:4"));
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.actual == LL{4});
    CHECK(r.note == "most repeating degree ambiguous: 2->2 1->4");

    r = verify_shadow(fam("path:5"));
    CHECK(r.verdict == Verdict::fails);
    CHECK(r.expected == LL{3});
    CHECK(r.actual == LL{5});
    CHECK(r.note.empty());

    // isolated vertices double themselves: eta counts degree 0 = 2*0
    r = verify_shadow(Graph(1));
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.expected == LL{2});

    // C4 has no degree-4 vertex, so eta is 0 and both sides are 4
    r = verify_shadow(fam("cycle:4"));
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.expected == LL{4});
    CHECK(r.actual == LL{4});
}

TEST_CASE("union-formula") {
    auto r = verify_union({fam("cycle:3"), fam("complete:2")});
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.expected == LL{3});  // no shared degree value, max of component cns

    r = verify_union({fam("complete:2"), fam("complete:2")});
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.expected == LL{4});  // shared degree 1 merges

    r = verify_union({fam("cycle:3"), fam("cycle:4")});
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.expected == LL{7});
    CHECK(r.witness.find("union=2^7") != std::string::npos);

    CHECK(verify_union({fam("cycle:3"), Graph(0)}).verdict == Verdict::precondition_skipped);
    CHECK_THROWS_AS(verify_union({}), std::invalid_argument);
}

TEST_CASE("family claims reject out-of-range sizes") {
    CHECK_THROWS_AS(verify_wheel_line(2), std::invalid_argument);
    CHECK_THROWS_AS(verify_helm_line(2), std::invalid_argument);
}

TEST_CASE("suite claim validation") {
    CHECK(known_claims().size() == 10);
    CHECK(std::is_sorted(known_claims().begin(), known_claims().end()));
    std::vector<CatalogEntry> catalog;
    catalog.push_back({fam("cycle:4"), "cycle:4", parse_family_spec("cycle:4")});
    CHECK_THROWS_AS(run_suite(catalog, {"no-such-claim"}), std::invalid_argument);

    const auto res = run_suite(catalog, {});
    CHECK(res.reports.empty());
    CHECK(res.holds == 0);
    CHECK(res.fails == 0);
    CHECK(res.skipped == 0);
}

TEST_CASE("suite dispatch and ordering") {
    std::vector<CatalogEntry> catalog;
    catalog.push_back({fam("cycle:4"), "cycle:4", parse_family_spec("cycle:4")});
    catalog.push_back({fam("wheel:4"), "wheel:4", parse_family_spec("wheel:4")});
    catalog.push_back({fam("helm:4"), "helm:4", parse_family_spec("helm:4")});

    const auto res = run_suite(catalog, {"union-formula", "wheel-line", "helm-line"});
    REQUIRE(res.reports.size() == 4);  // 2 unions, 1 wheel, 1 helm
    CHECK(res.reports[0].claim_id == "union-formula");
    CHECK(res.reports[0].instance == "union(cycle:4,wheel:4)");
    CHECK(res.reports[1].claim_id == "wheel-line");
    CHECK(res.reports[2].claim_id == "helm-line");
    CHECK(res.reports[2].verdict == Verdict::fails);
    CHECK(res.reports[3].claim_id == "union-formula");
    CHECK(res.reports[3].instance == "union(wheel:4,helm:4)");
    CHECK(res.holds + res.fails + res.skipped == static_cast<long long>(res.reports.size()));
}

TEST_CASE("suite duplicate claims collapse") {
    std::vector<CatalogEntry> catalog;
    catalog.push_back({fam("cycle:5"), "cycle:5", parse_family_spec("cycle:5")});
    const auto res = run_suite(catalog, {"regular-compound", "regular-compound"});
    CHECK(res.reports.size() == 1);
    CHECK(res.holds == 1);
}

TEST_CASE("suite determinism across thread counts and runs") {
    std::vector<CatalogEntry> catalog;
    for (int n = 3; n <= 9; ++n) {
        const auto spec = "cycle:" + std::to_string(n);
        catalog.push_back({fam(spec.c_str()), spec, parse_family_spec(spec)});
        const auto pspec = "path:" + std::to_string(n);
        catalog.push_back({fam(pspec.c_str()), pspec, parse_family_spec(pspec)});
    }

    SuiteOptions one;
    one.seed = 11;
    one.threads = 1;
    SuiteOptions four = one;
    four.threads = 4;

    const auto a = run_suite(catalog, known_claims(), one);
    const auto b = run_suite(catalog, known_claims(), four);
    const auto c = run_suite(catalog, known_claims(), one);

    REQUIRE(a.reports.size() == b.reports.size());
    REQUIRE(a.reports.size() == c.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i) {
        CAPTURE(i);
        CHECK(a.reports[i].claim_id == b.reports[i].claim_id);
        CHECK(a.reports[i].instance == b.reports[i].instance);
        CHECK(a.reports[i].expected == b.reports[i].expected);
        CHECK(a.reports[i].actual == b.reports[i].actual);
        CHECK(a.reports[i].verdict == b.reports[i].verdict);
        CHECK(a.reports[i].witness == b.reports[i].witness);
        CHECK(a.reports[i].note == b.reports[i].note);
        CHECK(a.reports[i].witness == c.reports[i].witness);
    }
    CHECK(a.holds == b.holds);
    CHECK(a.fails == b.fails);
    CHECK(a.skipped == b.skipped);
}
