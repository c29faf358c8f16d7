#pragma once

#include "latpath/polytope.hpp"

namespace latpath {

/// Vertex-edge graph of a polytope. Neighbor lists are sorted; the graph of
/// a polytope is symmetric, irreflexive and connected, and construction
/// verifies connectivity.
struct EdgeGraph {
    int n_vertices = 0;
    std::vector<std::vector<int>> adj;

    int num_edges() const;
    bool has_edge(int u, int v) const;
};

/// u ~ v iff the minimal face containing both (all rows tight at both forced
/// to equality) has exactly two vertices. Correct under degeneracy.
EdgeGraph build_edge_graph(const Polytope& p);

}  // namespace latpath
