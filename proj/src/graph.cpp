#include "walkper/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace walkper {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges) {
    if (vertex_count == 0) throw GraphError("graph must have at least one vertex");
    Graph g;
    g.n_ = vertex_count;
    g.adj_.assign(vertex_count * vertex_count, 0);
    for (auto [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count)
            throw GraphError("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
        if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
        auto& cell = g.adj_[std::size_t(u) * vertex_count + v];
        if (cell) throw GraphError("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
        cell = 1;
        g.adj_[std::size_t(v) * vertex_count + u] = 1;
    }

    g.offsets_.assign(vertex_count + 1, 0);
    for (std::size_t u = 0; u < vertex_count; ++u) {
        for (std::size_t v = 0; v < vertex_count; ++v) {
            if (g.adj_[u * vertex_count + v]) {
                g.targets_.push_back(Vertex(v));
                g.arcs_.push_back({Vertex(u), Vertex(v)});
            }
        }
        g.offsets_[u + 1] = g.targets_.size();
    }
    g.inverse_.resize(g.arcs_.size());
    for (std::size_t a = 0; a < g.arcs_.size(); ++a)
        g.inverse_[a] = g.arc_index(g.arcs_[a].terminus, g.arcs_[a].origin);

    std::vector<bool> seen(vertex_count, false);
    std::queue<Vertex> queue;
    queue.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop();
        for (Vertex v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = true;
                ++reached;
                queue.push(v);
            }
        }
    }
    g.connected_ = reached == vertex_count;
    return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const noexcept {
    return std::span<const Vertex>(targets_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::size_t Graph::arc_index(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v)
        throw GraphError("no arc " + std::to_string(u) + "->" + std::to_string(v));
    return offsets_[u] + std::size_t(it - nb.begin());
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count());
    for (const Arc& a : arcs_)
        if (a.origin < a.terminus) out.emplace_back(a.origin, a.terminus);
    return out;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.degrees.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) p.degrees[v] = g.degree(v);
    if (std::all_of(p.degrees.begin(), p.degrees.end(), [&](std::size_t d) { return d == p.degrees[0]; }))
        p.regular_k = p.degrees[0];
    return p;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.vertex_count(), -1);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::queue<Vertex> queue;
        queue.push(s);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop();
            for (Vertex v : g.neighbors(u)) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    queue.push(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

void require_walkable(const Graph& g) {
    if (!g.is_connected()) throw GraphError("graph is disconnected");
    if (g.edge_count() == 0) throw GraphError("graph has no edges");
}

}  // namespace walkper
