#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace walkper {

using Vertex = std::uint32_t;

/// A directed edge o(a) -> t(a).
struct Arc {
    Vertex origin;
    Vertex terminus;

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct DegreeProfile {
    std::vector<std::size_t> degrees;
    /// Present iff every vertex has the same degree.
    std::optional<std::size_t> regular_k;
};

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Arcs are indexed in (origin, terminus)
/// order, so arc ids, and every matrix built over them, are reproducible.
class Graph {
public:
    /// Throws GraphError on loops, repeated edges or out-of-range endpoints.
    static Graph from_edges(std::size_t vertex_count,
                            std::span<const std::pair<Vertex, Vertex>> edges);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return arcs_.size() / 2; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }

    bool adjacent(Vertex u, Vertex v) const noexcept { return adj_[std::size_t(u) * n_ + v] != 0; }
    std::span<const Vertex> neighbors(Vertex v) const noexcept;
    std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

    std::span<const Arc> arcs() const noexcept { return arcs_; }
    /// Index of arc u->v; requires adjacent(u, v).
    std::size_t arc_index(Vertex u, Vertex v) const;
    std::size_t inverse_arc(std::size_t a) const noexcept { return inverse_[a]; }

    /// Sorted edge list with u < v.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool is_connected() const noexcept { return connected_; }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    Graph() = default;

    std::size_t n_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> targets_;
    std::vector<Arc> arcs_;
    std::vector<std::size_t> inverse_;
    bool connected_ = false;
};

DegreeProfile degree_profile(const Graph& g);
bool is_bipartite(const Graph& g);
inline bool is_connected(const Graph& g) { return g.is_connected(); }

/// Throws GraphError unless g is connected and has at least one edge.
void require_walkable(const Graph& g);

}  // namespace walkper
