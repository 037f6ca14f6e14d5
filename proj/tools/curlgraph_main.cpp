#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "curlgraph/curling.hpp"
#include "curlgraph/enumerate.hpp"
#include "curlgraph/families.hpp"
#include "curlgraph/graph.hpp"
#include "curlgraph/graph6.hpp"
#include "curlgraph/transforms.hpp"
#include "curlgraph/verifier.hpp"

using json = nlohmann::ordered_json;
using namespace curlgraph;

namespace {

struct LabeledGraph {
    std::string label;
    Graph graph;
};

std::optional<long long> parse_ll(std::string_view text) {
    long long value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return value;
}

bool looks_like_sequence(const std::string& s) {
    bool digit = false;
    for (char c : s) {
        if (c >= '0' && c <= '9')
            digit = true;
        else if (c != ',' && c != ' ')
            return false;
    }
    return digit;
}

SymbolSequence parse_sequence(const std::string& text) {
    SymbolSequence out;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ',')) {
        const auto begin = token.find_first_not_of(' ');
        const auto end = token.find_last_not_of(' ');
        if (begin == std::string::npos)
            throw std::invalid_argument("sequence: empty entry in \"" + text + "\"");
        const auto value = parse_ll(std::string_view(token).substr(begin, end - begin + 1));
        if (!value || *value < 0)
            throw std::invalid_argument("sequence: bad entry \"" + token + "\"");
        out.push_back(*value);
    }
    if (out.empty())
        throw std::invalid_argument("sequence: no entries in \"" + text + "\"");
    return out;
}

std::vector<LabeledGraph> load_graph_file(const std::string& path) {
    if (path.empty())
        throw std::invalid_argument("empty file name after '@'");
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open file: " + path);
    std::vector<LabeledGraph> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        try {
            out.push_back({line, parse_graph6(line)});
        } catch (const Graph6Error& e) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

// '@file' for graph6 lines, 'name:params' for a family, anything else is a
// graph6 literal. Unambiguous: short-form graph6 never contains ':' or ','.
std::vector<LabeledGraph> resolve_graphs(const std::string& token) {
    if (!token.empty() && token[0] == '@')
        return load_graph_file(token.substr(1));
    if (token.find(':') != std::string::npos) {
        if (token.find("..") != std::string::npos)
            throw std::invalid_argument("family ranges are only valid as a verify scope: " + token);
        const auto spec = parse_family_spec(token);
        if (!spec)
            throw std::invalid_argument("unrecognized family spec: " + token);
        return {{token, generate(*spec)}};
    }
    return {{token, parse_graph6(token)}};
}

enum class Format { json, csv, plain };

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    if (name == "plain") return Format::plain;
    throw std::invalid_argument("unknown format: " + name);
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string join_ll(const std::vector<long long>& values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

json spectrum_json(const IdentityFactorization& runs) {
    json arr = json::array();
    for (const auto& r : runs) arr.push_back({r.value, r.multiplicity});
    return arr;
}

json value_json(const std::vector<long long>& v) {
    if (v.empty()) return nullptr;
    if (v.size() == 1) return v[0];
    return json(v);
}

json sequence_json(const SymbolSequence& s) {
    return json(s);
}

struct Output {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file)
            throw std::invalid_argument("cannot open output file: " + path);
        stream = &file;
    }
    std::ostream& out() { return *stream; }
};

long long runs_product(const IdentityFactorization& runs) {
    long long p = 1;
    for (const auto& r : runs) p *= r.multiplicity;
    return p;
}

// ---------------------------------------------------------------- cn

int cmd_cn(const std::string& input, Format format, const std::string& out_path) {
    Output output(out_path);
    auto& os = output.out();

    if (looks_like_sequence(input)) {
        const auto s = parse_sequence(input);
        const auto res = curling_number(s);
        const auto runs = identity_factorize(s);
        switch (format) {
            case Format::json: {
                json j;
                j["input"] = input;
                j["kind"] = "sequence";
                j["length"] = s.size();
                j["cn"] = res.k;
                j["witness"] = {{"prefix_len", res.witness.prefix_len},
                                {"block_len", res.witness.block_len},
                                {"count", res.witness.count}};
                j["spectrum"] = spectrum_json(runs);
                j["cnc"] = runs_product(runs);
                j["ic"] = runs.size();
                os << j.dump() << "\n";
                break;
            }
            case Format::csv:
                os << "input,kind,length,cn,prefix_len,block_len,count,spectrum,cnc,ic\n"
                   << csv_escape(input) << ",sequence," << s.size() << ',' << res.k << ','
                   << res.witness.prefix_len << ',' << res.witness.block_len << ','
                   << res.witness.count << ',' << csv_escape(format_spectrum(runs)) << ','
                   << runs_product(runs) << ',' << runs.size() << "\n";
                break;
            case Format::plain:
                os << "input " << input << "\ncn " << res.k << "\nwitness prefix=" << res.witness.prefix_len
                   << " block=" << res.witness.block_len << " count=" << res.witness.count
                   << "\nspectrum " << format_spectrum(runs) << "\ncnc " << runs_product(runs)
                   << "\nic " << runs.size() << "\n";
                break;
        }
        return 0;
    }

    const auto graphs = resolve_graphs(input);
    if (format == Format::csv)
        os << "input,kind,n,edges,graph6,spectrum,cn,cnc,ic,string_cn\n";
    for (const auto& [label, g] : graphs) {
        const auto spectrum = degree_spectrum(g);
        const auto sorted = degree_sequence(g);
        const auto string_curl = curling_number(sorted);
        switch (format) {
            case Format::json: {
                json j;
                j["input"] = label;
                j["kind"] = "graph";
                j["n"] = g.vertex_count();
                j["edges"] = g.edge_count();
                j["graph6"] = to_graph6(g);
                j["spectrum"] = spectrum_json(spectrum);
                j["cn"] = graph_cn(g);
                j["cnc"] = graph_cnc(g);
                j["ic"] = graph_ic(g);
                j["string_cn"] = string_curl.k;
                j["string_witness"] = {{"prefix_len", string_curl.witness.prefix_len},
                                       {"block_len", string_curl.witness.block_len},
                                       {"count", string_curl.witness.count}};
                os << j.dump() << "\n";
                break;
            }
            case Format::csv:
                os << csv_escape(label) << ",graph," << g.vertex_count() << ',' << g.edge_count()
                   << ',' << csv_escape(to_graph6(g)) << ',' << csv_escape(format_spectrum(spectrum))
                   << ',' << graph_cn(g) << ',' << graph_cnc(g) << ',' << graph_ic(g) << ','
                   << string_curl.k << "\n";
                break;
            case Format::plain:
                os << "input " << label << "\nn " << g.vertex_count() << "\nedges "
                   << g.edge_count() << "\nspectrum " << format_spectrum(spectrum) << "\ncn "
                   << graph_cn(g) << "\ncnc " << graph_cnc(g) << "\nic " << graph_ic(g)
                   << "\nstring_cn " << string_curl.k << "\n";
                break;
        }
    }
    return 0;
}

// ---------------------------------------------------------------- extend

int cmd_extend(const std::string& input, long long max_steps, Format format,
               const std::string& out_path) {
    Output output(out_path);
    auto& os = output.out();

    const auto s = parse_sequence(input);
    const auto res = extend_until_one(s, max_steps);
    const SymbolSequence trace(res.sequence.begin() + static_cast<std::ptrdiff_t>(s.size()),
                               res.sequence.end());
    switch (format) {
        case Format::json: {
            json j;
            j["input"] = input;
            j["max_steps"] = max_steps;
            j["reached_one"] = res.reached_one;
            j["steps"] = res.steps;
            j["trace"] = sequence_json(trace);
            j["final"] = sequence_json(res.sequence);
            os << j.dump() << "\n";
            break;
        }
        case Format::csv: {
            std::string trace_s = join_ll(trace, ';');
            std::string final_s = join_ll(res.sequence, ';');
            os << "input,max_steps,reached_one,steps,trace,final\n"
               << csv_escape(input) << ',' << max_steps << ','
               << (res.reached_one ? "true" : "false") << ',' << res.steps << ',' << trace_s
               << ',' << final_s << "\n";
            break;
        }
        case Format::plain:
            os << "input " << input << "\nreached_one " << (res.reached_one ? "true" : "false")
               << "\nsteps " << res.steps << "\ntrace " << join_ll(trace, ',') << "\nfinal "
               << join_ll(res.sequence, ',') << "\n";
            break;
    }
    return 0;
}

// ---------------------------------------------------------------- transform

struct TransformResult {
    json inputs;       // string or array of strings
    Graph graph;
    std::vector<int> m;  // super subdivision only
};

void emit_transform(std::ostream& os, const std::string& kind, const TransformResult& t,
                    Format format, bool header) {
    const auto spectrum = degree_spectrum(t.graph);
    std::string g6;
    if (t.graph.vertex_count() <= 62) g6 = to_graph6(t.graph);
    switch (format) {
        case Format::json: {
            json j;
            j["kind"] = kind;
            j["input"] = t.inputs;
            j["n"] = t.graph.vertex_count();
            j["edges"] = t.graph.edge_count();
            if (!g6.empty())
                j["graph6"] = g6;
            else
                j["graph6"] = nullptr;
            if (!t.m.empty()) j["m"] = t.m;
            j["spectrum"] = spectrum_json(spectrum);
            j["cn"] = graph_cn(t.graph);
            j["cnc"] = graph_cnc(t.graph);
            j["ic"] = graph_ic(t.graph);
            os << j.dump() << "\n";
            break;
        }
        case Format::csv: {
            if (header) os << "kind,input,n,edges,graph6,m,spectrum,cn,cnc,ic\n";
            std::string in = t.inputs.is_string() ? t.inputs.get<std::string>() : t.inputs.dump();
            std::string m_s;
            for (std::size_t i = 0; i < t.m.size(); ++i) {
                if (i) m_s += ';';
                m_s += std::to_string(t.m[i]);
            }
            os << kind << ',' << csv_escape(in) << ',' << t.graph.vertex_count() << ','
               << t.graph.edge_count() << ',' << csv_escape(g6) << ',' << m_s << ','
               << csv_escape(format_spectrum(spectrum)) << ',' << graph_cn(t.graph) << ','
               << graph_cnc(t.graph) << ',' << graph_ic(t.graph) << "\n";
            break;
        }
        case Format::plain:
            os << "kind " << kind << "\ninput "
               << (t.inputs.is_string() ? t.inputs.get<std::string>() : t.inputs.dump()) << "\nn "
               << t.graph.vertex_count() << "\nedges " << t.graph.edge_count();
            if (!g6.empty()) os << "\ngraph6 " << g6;
            os << "\nspectrum " << format_spectrum(spectrum) << "\ncn " << graph_cn(t.graph)
               << "\ncnc " << graph_cnc(t.graph) << "\nic " << graph_ic(t.graph) << "\n";
            break;
    }
}

int cmd_transform(const std::string& kind, const std::vector<std::string>& inputs,
                  const std::string& m_text, Format format, const std::string& out_path) {
    Output output(out_path);
    auto& os = output.out();

    if (kind != "supersubdivide" && !m_text.empty())
        throw std::invalid_argument("--m applies only to supersubdivide");

    if (kind == "union") {
        std::vector<Graph> parts;
        json labels = json::array();
        for (const auto& token : inputs)
            for (auto& [label, g] : resolve_graphs(token)) {
                labels.push_back(label);
                parts.push_back(std::move(g));
            }
        TransformResult t{std::move(labels), disjoint_union(parts), {}};
        emit_transform(os, kind, t, format, true);
        return 0;
    }

    if (inputs.size() != 1)
        throw std::invalid_argument(kind + " takes exactly one input");

    std::vector<int> m;
    if (kind == "supersubdivide") {
        if (m_text.empty())
            throw std::invalid_argument("supersubdivide requires --m");
        for (Symbol v : parse_sequence(m_text)) {
            if (v < 1) throw std::invalid_argument("--m entries must be >= 1");
            m.push_back(static_cast<int>(v));
        }
    }

    bool header = true;
    for (const auto& [label, g] : resolve_graphs(inputs[0])) {
        TransformResult t{json(label), Graph(), m};
        if (kind == "complement")
            t.graph = complement(g);
        else if (kind == "line")
            t.graph = line_graph(g);
        else if (kind == "subdivide")
            t.graph = subdivision(g);
        else if (kind == "supersubdivide")
            t.graph = super_subdivision(g, SuperSubdivisionSpec{m});
        else if (kind == "shadow")
            t.graph = shadow_graph(g);
        else
            throw std::invalid_argument("unknown transform kind: " + kind);
        emit_transform(os, kind, t, format, header);
        header = false;
    }
    return 0;
}

// ---------------------------------------------------------------- verify

struct ScopeRange {
    int lo = 1;
    int hi = 1;
    bool connected = false;
};

// enumerate:N, enumerate:A..B, optional trailing (connected)
ScopeRange parse_enumerate_scope(std::string rest) {
    ScopeRange r;
    const std::string suffix = "(connected)";
    if (rest.size() >= suffix.size() && rest.ends_with(suffix)) {
        r.connected = true;
        rest.resize(rest.size() - suffix.size());
    }
    const auto dots = rest.find("..");
    std::optional<long long> lo, hi;
    if (dots == std::string::npos) {
        hi = parse_ll(rest);
        lo = 1;
    } else {
        lo = parse_ll(rest.substr(0, dots));
        hi = parse_ll(rest.substr(dots + 2));
    }
    if (!lo || !hi || *lo < 1 || *hi < *lo || *hi > 7)
        throw std::invalid_argument("bad enumerate scope; use enumerate:N or enumerate:A..B with 1 <= A <= B <= 7");
    r.lo = static_cast<int>(*lo);
    r.hi = static_cast<int>(*hi);
    return r;
}

std::vector<CatalogEntry> resolve_scope(const std::string& scope) {
    std::vector<CatalogEntry> catalog;

    if (scope.rfind("enumerate:", 0) == 0) {
        const auto range = parse_enumerate_scope(scope.substr(10));
        for (int n = range.lo; n <= range.hi; ++n) {
            LabeledGraphEnumerator en(n, range.connected);
            while (auto g = en.next()) {
                std::string label = to_graph6(*g);
                catalog.push_back({std::move(*g), std::move(label), std::nullopt});
            }
        }
        return catalog;
    }

    if (!scope.empty() && scope[0] == '@') {
        for (auto& [label, g] : load_graph_file(scope.substr(1)))
            catalog.push_back({std::move(g), std::move(label), std::nullopt});
        return catalog;
    }

    const auto colon = scope.find(':');
    if (colon != std::string::npos) {
        const auto name = scope.substr(0, colon);
        const auto family = family_from_name(name);
        if (!family)
            throw std::invalid_argument("unrecognized scope: " + scope);
        const auto rest = scope.substr(colon + 1);
        const auto dots = rest.find("..");
        if (dots != std::string::npos) {
            const auto lo = parse_ll(rest.substr(0, dots));
            const auto hi = parse_ll(rest.substr(dots + 2));
            if (!lo || !hi || *hi < *lo)
                throw std::invalid_argument("bad family range: " + scope);
            for (long long n = *lo; n <= *hi; ++n) {
                FamilySpec spec{*family, {static_cast<int>(n)}};
                catalog.push_back({generate(spec), std::string(name) + ":" + std::to_string(n), spec});
            }
            return catalog;
        }
        const auto spec = parse_family_spec(scope);
        if (!spec)
            throw std::invalid_argument("unrecognized scope: " + scope);
        catalog.push_back({generate(*spec), scope, *spec});
        return catalog;
    }

    catalog.push_back({parse_graph6(scope), scope, std::nullopt});
    return catalog;
}

int suite_threads_from_env() {
    const char* env = std::getenv("CURLGRAPH_THREADS");
    if (!env) return 0;
    const auto value = parse_ll(env);
    if (!value || *value < 1)
        throw std::invalid_argument("CURLGRAPH_THREADS must be a positive integer, got \"" +
                                    std::string(env) + "\"");
    return static_cast<int>(*value);
}

void emit_report_json(std::ostream& os, const ClaimReport& r) {
    json j;
    j["claim_id"] = r.claim_id;
    j["instance"] = r.instance;
    j["expected"] = value_json(r.expected);
    j["actual"] = value_json(r.actual);
    j["verdict"] = verdict_name(r.verdict);
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (!r.note.empty()) j["note"] = r.note;
    os << j.dump() << "\n";
}

int cmd_verify(const std::string& claims_text, const std::string& scope, std::uint64_t seed,
               Format format, const std::string& out_path) {
    std::vector<std::string> claims;
    if (claims_text == "all") {
        claims = known_claims();
    } else {
        std::string token;
        std::stringstream ss(claims_text);
        while (std::getline(ss, token, ','))
            if (!token.empty()) claims.push_back(token);
        if (claims.empty())
            throw std::invalid_argument("no claims given");
    }

    SuiteOptions options;
    options.seed = seed;
    options.threads = suite_threads_from_env();

    const auto catalog = resolve_scope(scope);
    const auto result = run_suite(catalog, claims, options);

    Output output(out_path);
    auto& os = output.out();
    switch (format) {
        case Format::json: {
            for (const auto& r : result.reports) emit_report_json(os, r);
            json summary;
            summary["summary"] = {{"holds", result.holds},
                                  {"fails", result.fails},
                                  {"skipped", result.skipped}};
            os << summary.dump() << "\n";
            break;
        }
        case Format::csv: {
            os << "claim_id,instance,expected,actual,verdict,witness,note\n";
            for (const auto& r : result.reports)
                os << r.claim_id << ',' << csv_escape(r.instance) << ','
                   << join_ll(r.expected, ';') << ',' << join_ll(r.actual, ';') << ','
                   << verdict_name(r.verdict) << ',' << csv_escape(r.witness) << ','
                   << csv_escape(r.note) << "\n";
            os << "# holds=" << result.holds << " fails=" << result.fails
               << " skipped=" << result.skipped << "\n";
            break;
        }
        case Format::plain: {
            for (const auto& r : result.reports) {
                os << verdict_name(r.verdict) << '\t' << r.claim_id << '\t' << r.instance
                   << "\texpected=" << join_ll(r.expected, ';') << "\tactual="
                   << join_ll(r.actual, ';');
                if (!r.witness.empty()) os << '\t' << r.witness;
                if (!r.note.empty()) os << '\t' << r.note;
                os << "\n";
            }
            os << "holds=" << result.holds << " fails=" << result.fails
               << " skipped=" << result.skipped << "\n";
            break;
        }
    }
    return result.fails > 0 ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"curling numbers of integer sequences and graph degree sequences"};
    app.require_subcommand(1);

    std::string format_name = "json";
    std::string out_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "output format: json, csv or plain")
            ->check(CLI::IsMember({"json", "csv", "plain"}));
        cmd->add_option("--out", out_path, "write the payload to a file instead of stdout");
    };

    std::string cn_input;
    auto* cn = app.add_subcommand(
        "cn", "curling invariants of a sequence, family instance, graph6 literal or @file");
    cn->add_option("input", cn_input, "\"2,2,2\" | family:params | graph6 | @file")->required();
    add_common(cn);

    std::string extend_input;
    long long max_steps = 1000;
    auto* extend = app.add_subcommand("extend", "append curling numbers until a 1 appears");
    extend->add_option("sequence", extend_input, "comma-separated start sequence")->required();
    extend->add_option("--max-steps", max_steps, "append budget")
        ->check(CLI::NonNegativeNumber);
    add_common(extend);

    std::string transform_kind;
    std::vector<std::string> transform_inputs;
    std::string m_text;
    auto* transform = app.add_subcommand("transform", "apply a graph construction");
    transform->add_option("kind", transform_kind, "complement|line|subdivide|supersubdivide|shadow|union")
        ->required()
        ->check(CLI::IsMember({"complement", "line", "subdivide", "supersubdivide", "shadow", "union"}));
    transform->add_option("inputs", transform_inputs, "graph sources; union accepts several")
        ->required()
        ->expected(-1);
    transform->add_option("--m", m_text, "edge multiplicities for supersubdivide, e.g. 2,2,2");
    add_common(transform);

    std::string claims_text = "all";
    std::string scope;
    std::uint64_t seed = 0;
    auto* verify = app.add_subcommand("verify", "check claims over a catalog of graphs");
    verify->add_option("--claims", claims_text, "comma-separated claim ids, or \"all\"");
    verify->add_option("--scope", scope,
                       "enumerate:N[(connected)] | family:k | family:A..B | graph6 | @file")
        ->required();
    verify->add_option("--seed", seed, "seed for randomized claim inputs");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        const Format format = parse_format(format_name);
        if (cn->parsed()) return cmd_cn(cn_input, format, out_path);
        if (extend->parsed()) return cmd_extend(extend_input, max_steps, format, out_path);
        if (transform->parsed())
            return cmd_transform(transform_kind, transform_inputs, m_text, format, out_path);
        if (verify->parsed()) return cmd_verify(claims_text, scope, seed, format, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
