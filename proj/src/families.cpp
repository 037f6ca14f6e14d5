#include "curlgraph/families.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace curlgraph {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

void require_param_count(const FamilySpec& spec, std::size_t count) {
    require(spec.params.size() == count,
            std::string(family_name(spec.family)) + ": expected " + std::to_string(count) +
                (count == 1 ? " parameter" : " parameters") + ", got " +
                std::to_string(spec.params.size()));
}

std::optional<int> parse_int(std::string_view text) {
    int value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return value;
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::star: return "star";
        case Family::wheel: return "wheel";
        case Family::helm: return "helm";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : {Family::path, Family::cycle, Family::complete, Family::complete_bipartite,
                     Family::star, Family::wheel, Family::helm})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

std::optional<FamilySpec> parse_family_spec(std::string_view text) {
    const auto colon = text.find(':');
    const auto name = text.substr(0, colon);
    const auto family = family_from_name(name);
    if (!family) return std::nullopt;

    FamilySpec spec{*family, {}};
    if (colon == std::string_view::npos) return spec;

    auto rest = text.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto value = parse_int(rest.substr(0, comma));
        if (!value) return std::nullopt;
        spec.params.push_back(*value);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    if (spec.params.empty()) return std::nullopt;
    return spec;
}

Graph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::path: {
            require_param_count(spec, 1);
            const int n = spec.params[0];
            require(n >= 1, "path: need n >= 1, got " + std::to_string(n));
            Graph g(n);
            for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case Family::cycle: {
            require_param_count(spec, 1);
            const int n = spec.params[0];
            require(n >= 3, "cycle: need n >= 3, got " + std::to_string(n));
            Graph g(n);
            for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
            return g;
        }
        case Family::complete: {
            require_param_count(spec, 1);
            const int n = spec.params[0];
            require(n >= 1, "complete: need n >= 1, got " + std::to_string(n));
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
            return g;
        }
        case Family::complete_bipartite: {
            require_param_count(spec, 2);
            const int a = spec.params[0];
            const int b = spec.params[1];
            require(a >= 1, "complete_bipartite: need a >= 1, got " + std::to_string(a));
            require(b >= 1, "complete_bipartite: need b >= 1, got " + std::to_string(b));
            Graph g(a + b);
            for (int u = 0; u < a; ++u)
                for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
            return g;
        }
        case Family::star: {
            require_param_count(spec, 1);
            const int n = spec.params[0];
            require(n >= 1, "star: need n >= 1 leaves, got " + std::to_string(n));
            Graph g(n + 1);
            for (int i = 1; i <= n; ++i) g.add_edge(0, i);
            return g;
        }
        case Family::wheel: {
            require_param_count(spec, 1);
            const int n = spec.params[0];
            require(n >= 3, "wheel: need n >= 3 rim vertices, got " + std::to_string(n));
            Graph g(n + 1);
            for (int i = 1; i <= n; ++i) {
                g.add_edge(0, i);
                g.add_edge(i, 1 + i % n);
            }
            return g;
        }
        case Family::helm: {
            require_param_count(spec, 1);
            const int n = spec.params[0];
            require(n >= 3, "helm: need n >= 3 rim vertices, got " + std::to_string(n));
            Graph g(2 * n + 1);
            for (int i = 1; i <= n; ++i) {
                g.add_edge(0, i);
                g.add_edge(i, 1 + i % n);
                g.add_edge(i, n + i);
            }
            return g;
        }
    }
    throw std::invalid_argument("generate: unknown family");
}

}  // namespace curlgraph
