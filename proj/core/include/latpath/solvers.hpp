#pragma once

#include "latpath/metrics.hpp"
#include "latpath/paths.hpp"

// Complete path-construction algorithms. Each solver traces a walk on the
// polytope graph, reports the length bound its rule declares next to the
// observed length, and ends at the optimum of the governing objective.
// Bound checks are returned as data (not asserted) so harnesses can use a
// violation as the falsification signal.

namespace latpath {

struct BoundCheck {
    std::string name;
    Int declared;
    Int observed;

    bool ok() const { return observed <= declared; }
};

struct SolveReport {
    PathTrace trace;
    int optimum = -1;
    std::vector<BoundCheck> bound_checks;
    int sub_lp_count = 0;

    const BoundCheck& headline() const { return bound_checks.front(); }
    bool all_bounds_ok() const;
};

/// True when every coordinate of every vertex lies in {-1,0,1}, {0,1/2,1}
/// or {0,1,2}: the vertex sets solve_half_integral accepts.
bool is_half_integral_vertex_set(const std::vector<QVec>& verts);

/// Half-integral solver: recenters vertices into {-1,0,1}^n (accepting
/// {0,1/2,1}-, {0,1,2}- or already centered vertex sets), grows the fixed
/// support along improving neighbors on shrinking faces, then follows the
/// coherent path against minus the reached vertex. Bounds: d + 2n always,
/// 3d when full-dimensional, d + 2|supp| from the run itself, and 2s on
/// uniform-support instances (where the support phase provably takes no
/// steps).
SolveReport solve_half_integral(const Polytope& p, const EdgeGraph& g, const Objective& c,
                                int start);

/// Level solver: with a_1..a_d the canonical independent tight rows at the
/// start, walks coherent legs against -a_i on the face chain
/// F_i = {x : a_j x = b_j for j <= i}, i = d..1. Each leg takes at most m
/// steps on an (m+1)-level polytope; the total is at most (d-1)m + 1.
SolveReport solve_level(const Polytope& p, const EdgeGraph& g, const Objective& c, int start);

struct DescentResult {
    SignedPermutation sigma;
    PathTrace trace;
    int sub_lp_count = 0;
};

/// Greedy signed-permutation descent: repeatedly fixes the unfixed coordinate
/// currently closest to 0 or k (sign by which boundary), walking
/// lowest-index coordinate-improving edges to the coordinate-maximal face.
/// Ends at the x_sigma-maximal vertex of the constructed sigma in at most
/// d*floor(k/2) steps.
DescentResult adaptive_sigma_descent(const Polytope& p, const EdgeGraph& g, int start);

/// From the x_sigma-maximal vertex, coherent legs against -e_{sigma^{-1}(i)}
/// climb the flag G_0 up to G_n = P, reaching the c-maximum in at most d*k
/// steps for any c.
SolveReport path_from_sigma_max(const Polytope& p, const EdgeGraph& g,
                                const SignedPermutation& sigma, const Objective& c);

/// Shadow solve with the auxiliary objective d = -(sum of canonical
/// independent tight rows at the start): at most dim*n*k*||A||_inf steps.
SolveReport lattice_shadow_solve(const Polytope& p, const EdgeGraph& g, const Objective& c,
                                 int start);

/// Two-phase solver: adaptive descent to an x_sigma-maximal vertex, then
/// path_from_sigma_max with the same sigma. Total at most d(k + floor(k/2))
/// steps across at most 2n face LPs. The concatenation is a walk but not
/// c-monotone overall.
SolveReport solve_lattice_lp(const Polytope& p, const EdgeGraph& g, const Objective& c, int start);

/// Greatest-improvement walk under x_sigma (alpha = 2k+1): reaches the
/// x_sigma-maximal vertex in at most d*k steps from any start.
SolveReport solve_greatest_improvement(const Polytope& p, const EdgeGraph& g,
                                       const SignedPermutation& sigma, int start);

}  // namespace latpath
