#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "walkper/graph.hpp"

namespace walkper {

/// C_n, n >= 3.
Graph cycle(std::size_t n);
/// K_n, n >= 1.
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Complete multipartite graph with the given part sizes (all >= 1).
Graph complete_multipartite(std::span<const std::size_t> parts);
/// K_{s,s,s}.
Graph complete_tripartite(std::size_t s);
Graph petersen();

/// Graph with adjacency A(g) (x) J_t; vertex (v, i) has id v * t + i.
Graph kronecker_all_ones(const Graph& g, std::size_t t);

/// Builds a graph from a generator spec:
///   cycle:n  complete:n  complete_bipartite:a,b  multipartite:s
///   kron:<spec>,t  petersen
/// Throws GraphError on a malformed spec.
Graph generate(std::string_view spec);

}  // namespace walkper
