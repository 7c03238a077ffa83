#include "walkper/generators.hpp"

#include <charconv>
#include <string>
#include <utility>

namespace walkper {
namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

std::size_t parse_count(std::string_view text, std::string_view spec) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw GraphError("bad number '" + std::string(text) + "' in generator spec '" + std::string(spec) + "'");
    return value;
}

std::vector<std::size_t> parse_counts(std::string_view text, std::string_view spec) {
    std::vector<std::size_t> out;
    while (true) {
        auto comma = text.find(',');
        out.push_back(parse_count(text.substr(0, comma), spec));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace

Graph cycle(std::size_t n) {
    if (n < 3) throw GraphError("cycle needs at least 3 vertices");
    EdgeList edges;
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(Vertex(i), Vertex((i + 1) % n));
    return Graph::from_edges(n, edges);
}

Graph complete(std::size_t n) {
    if (n < 1) throw GraphError("complete graph needs at least 1 vertex");
    EdgeList edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(Vertex(i), Vertex(j));
    return Graph::from_edges(n, edges);
}

Graph complete_multipartite(std::span<const std::size_t> parts) {
    if (parts.empty()) throw GraphError("multipartite graph needs at least one part");
    std::vector<std::size_t> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] == 0) throw GraphError("part sizes must be positive");
        part_of.insert(part_of.end(), parts[p], p);
    }
    EdgeList edges;
    for (std::size_t i = 0; i < part_of.size(); ++i)
        for (std::size_t j = i + 1; j < part_of.size(); ++j)
            if (part_of[i] != part_of[j]) edges.emplace_back(Vertex(i), Vertex(j));
    return Graph::from_edges(part_of.size(), edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    const std::size_t parts[] = {a, b};
    return complete_multipartite(parts);
}

Graph complete_tripartite(std::size_t s) {
    const std::size_t parts[] = {s, s, s};
    return complete_multipartite(parts);
}

Graph petersen() {
    EdgeList edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph::from_edges(10, edges);
}

Graph kronecker_all_ones(const Graph& g, std::size_t t) {
    if (t < 1) throw GraphError("Kronecker factor t must be >= 1");
    EdgeList edges;
    for (auto [u, v] : g.edges())
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j)
                edges.emplace_back(Vertex(u * t + i), Vertex(v * t + j));
    return Graph::from_edges(g.vertex_count() * t, edges);
}

Graph generate(std::string_view spec) {
    auto colon = spec.find(':');
    std::string_view name = spec.substr(0, colon);
    std::string_view args = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

    if (name == "petersen" && args.empty()) return petersen();
    if (name == "kron") {
        auto comma = args.rfind(',');
        if (comma == std::string_view::npos) throw GraphError("kron spec needs ',t': " + std::string(spec));
        return kronecker_all_ones(generate(args.substr(0, comma)), parse_count(args.substr(comma + 1), spec));
    }
    if (args.empty()) throw GraphError("unknown or incomplete generator spec '" + std::string(spec) + "'");
    auto counts = parse_counts(args, spec);
    if (name == "cycle" && counts.size() == 1) return cycle(counts[0]);
    if (name == "complete" && counts.size() == 1) return complete(counts[0]);
    if (name == "complete_bipartite" && counts.size() == 2) return complete_bipartite(counts[0], counts[1]);
    if (name == "multipartite") {
        if (counts.size() == 1) return complete_tripartite(counts[0]);
        return complete_multipartite(counts);
    }
    throw GraphError("unknown generator spec '" + std::string(spec) + "'");
}

}  // namespace walkper
