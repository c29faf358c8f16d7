#pragma once

#include "latpath/edge_graph.hpp"
#include "latpath/objective.hpp"
#include "latpath/polytope.hpp"

// Independent brute-force ground truth. Nothing here shares code with the
// path tracers: optima come from linear scans, distances from BFS over the
// orientation digraph, and the exact monotone diameter from enumerating
// realizable edge-orientation sign patterns.

namespace latpath {

/// Edges of a polytope graph directed by an objective whose perturbed order
/// is strict on every edge. Acyclic by construction (arcs follow a fixed
/// order on value tuples); has exactly one sink and one source.
struct OrientationDigraph {
    int n_vertices = 0;
    std::vector<std::vector<int>> out;
    int sink = -1;
    int source = -1;
};

/// Throws PreconditionError when o ties on some edge.
OrientationDigraph orient(const EdgeGraph& g, const std::vector<QVec>& verts, const Objective& o);

struct Optimum {
    int index = -1;
    bool unique = false;  // false reports a value-tuple tie
};

Optimum brute_force_optimum(const std::vector<QVec>& verts, const Objective& o);

/// Directed BFS distance from `from` to the sink of the orientation digraph.
int shortest_monotone_distance(const EdgeGraph& g, const std::vector<QVec>& verts,
                               const Objective& o, int from);

struct DiameterEstimate {
    int value = 0;
    Objective witness_objective;
    int witness_vertex = -1;
    long long orientations = 0;  // realizable orientations visited (exact mode)
    std::vector<std::string> orientation_patterns;  // '+'/'-' per canonical edge (exact mode)
};

/// Certified lower bound: max of shortest_monotone_distance over `count`
/// seeded random integer objectives in [-9,9]^n plus the +-x_sigma family
/// for a deterministic sample of signed permutations, each perturbed, over
/// all start vertices.
DiameterEstimate monotone_diameter_sampled(const Polytope& p, const EdgeGraph& g, int count,
                                           std::uint64_t seed);

/// Exact monotone diameter for tiny instances (n <= 3, <= 12 vertices) by
/// enumerating all realizable edge-orientation sign patterns. Realizability
/// of a strict system {c.(u-v) > 0} is decided exactly by maximizing a slack
/// coordinate over the unit box with the library's own vertex enumeration.
DiameterEstimate monotone_diameter_exact_tiny(const Polytope& p, const EdgeGraph& g);

struct LexCounterexample {
    SignedPermutation sigma;
    IVec x, y;
};

struct LexOrderReport {
    bool pass = false;
    long long sigma_count = 0;
    long long pairs_per_sigma = 0;
    std::optional<LexCounterexample> counterexample;
};

/// Exhaustively compare the x_sigma dot-product order with the combinatorial
/// lexicographic order over all signed permutations and all ordered pairs of
/// lattice points in [-k,k]^n. With alpha >= 2k+1 this must pass; smaller
/// alpha probes the sharpness of the hypothesis (reported, not asserted).
LexOrderReport verify_lex_order(int n, const Int& k, const Int& alpha);

}  // namespace latpath
