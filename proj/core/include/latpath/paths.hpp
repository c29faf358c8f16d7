#pragma once

#include "latpath/edge_graph.hpp"
#include "latpath/objective.hpp"
#include "latpath/polytope.hpp"

// Edge-pivot path tracers. Every step of every rule is an edge of the
// polytope graph; traces carry per-step metadata and the length bound the
// generating rule claims, and are validated on construction.

namespace latpath {

struct PathStep {
    std::string rule;
    QVec aux;       // auxiliary (shadow) direction the step was chosen under
    FaceSpec face;  // face the step was restricted to (empty = whole polytope)
};

struct PathTrace {
    std::vector<int> vertices;  // visited vertex indices; steps.size()+1 entries
    std::vector<PathStep> steps;
    Int declared_bound = 0;

    int length() const { return static_cast<int>(steps.size()); }
    int start() const { return vertices.front(); }
    int end() const { return vertices.back(); }

    /// Append `other`, which must start where this trace ends.
    void append(const PathTrace& other);
};

/// Throws InternalError unless consecutive vertices are graph edges.
void validate_walk(const PathTrace& t, const EdgeGraph& g);

/// Throws InternalError unless the trace strictly increases o's value tuple.
void validate_monotone(const PathTrace& t, const Objective& o, const std::vector<QVec>& verts);

/// Optional restriction of a tracer to a face: vertices with mask[v] == 0 are
/// invisible. A null mask means the whole graph.
using VertexMask = std::vector<char>;

/// The coherent (shadow) path: starting from the c-maximum of the d-minimal
/// face (checked), repeatedly move to the neighbor maximizing the gain ratio
/// c.(u-x)/d.(u-x) among neighbors improving both d's primary vector and c's
/// perturbed tuple; stop when none exists. Equal ratios are broken by larger
/// c-tuple, then smaller vertex index. The result is strictly d- and
/// c-monotone, takes at most |{d.v}|-1 steps, and ends at the c-maximum when
/// c's perturbed order is total.
PathTrace coherent_path(const EdgeGraph& g, const std::vector<QVec>& verts, const Objective& c,
                        const Objective& d, int start, const VertexMask* within = nullptr,
                        const FaceSpec& face_ctx = {});

/// The full d-monotone sweep: same ratio rule over all d-improving neighbors
/// (c-improvement not required), until the d-maximal face is reached. Used to
/// measure the distinct-value length bound on whole shadows.
PathTrace coherent_sweep(const EdgeGraph& g, const std::vector<QVec>& verts, const Objective& c,
                         const Objective& d, int start, const VertexMask* within = nullptr,
                         const FaceSpec& face_ctx = {});

/// Auxiliary objective of the lattice shadow edge-pivot rule: minus the sum
/// of the first dim(p) tight rows at the start whose restrictions to the
/// direction space are linearly independent (canonical row order). The result
/// is uniquely minimized at the start vertex, and ||d||_inf <= dim * ||A||_inf.
Objective lattice_shadow_objective(const Polytope& p, int start_vertex);

/// Move to the neighbor with the largest value tuple until none improves.
PathTrace greatest_improvement_path(const EdgeGraph& g, const std::vector<QVec>& verts,
                                    const Objective& o, int start,
                                    const VertexMask* within = nullptr);

/// The flag of faces G_n >= ... >= G_0 obtained by successively restricting
/// to the sign-adjusted coordinate-maximal face in the order sigma^{-1}(n),
/// ..., sigma^{-1}(1). G_0 is the unique x_sigma-maximal vertex.
struct SigmaFlag {
    std::vector<FaceSpec> faces;                 // G_n first, G_0 last (n+1 entries)
    std::vector<std::vector<int>> face_vertices; // vertex indices per flag face
    int g0 = -1;                                 // the x_sigma-maximal vertex
};

SigmaFlag sigma_flag(const Polytope& p, const SignedPermutation& sigma);

}  // namespace latpath
