#include "latpath/paths.hpp"

#include <algorithm>

namespace latpath {

void PathTrace::append(const PathTrace& other) {
    if (vertices.empty()) {
        *this = other;
        return;
    }
    if (other.vertices.empty()) return;
    if (other.vertices.front() != vertices.back())
        throw InternalError("PathTrace::append: traces do not join");
    vertices.insert(vertices.end(), other.vertices.begin() + 1, other.vertices.end());
    steps.insert(steps.end(), other.steps.begin(), other.steps.end());
}

void validate_walk(const PathTrace& t, const EdgeGraph& g) {
    if (t.vertices.size() != t.steps.size() + 1)
        throw InternalError("trace: vertex/step count mismatch");
    for (std::size_t i = 0; i + 1 < t.vertices.size(); ++i)
        if (!g.has_edge(t.vertices[i], t.vertices[i + 1]))
            throw InternalError("trace: step is not a graph edge");
}

void validate_monotone(const PathTrace& t, const Objective& o, const std::vector<QVec>& verts) {
    for (std::size_t i = 0; i + 1 < t.vertices.size(); ++i)
        if (objective_compare(o, verts[t.vertices[i + 1]], verts[t.vertices[i]]) <= 0)
            throw InternalError("trace: step is not strictly improving");
}

namespace {

bool allowed(const VertexMask* m, int v) { return !m || (*m)[v] != 0; }

// Distinct primary d-values over the visible vertex set; the coherent length
// bound is this count minus one.
Int distinct_value_count(const QVec& d, const std::vector<QVec>& verts, const VertexMask* within) {
    std::vector<Rat> vals;
    for (std::size_t v = 0; v < verts.size(); ++v)
        if (allowed(within, static_cast<int>(v))) vals.push_back(dot(d, verts[v]));
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return Int(vals.size());
}

void check_coherent_start(const std::vector<QVec>& verts, const Objective& c, const Objective& d,
                          int start, const VertexMask* within) {
    if (start < 0 || start >= static_cast<int>(verts.size()) || !allowed(within, start))
        throw PreconditionError("coherent path: start is not a visible vertex");
    Rat dmin = dot(d.primary, verts[start]);
    for (std::size_t v = 0; v < verts.size(); ++v)
        if (allowed(within, static_cast<int>(v))) dmin = std::min(dmin, dot(d.primary, verts[v]));
    if (dot(d.primary, verts[start]) != dmin)
        throw PreconditionError("coherent path: start is not on the d-minimal face");
    for (std::size_t v = 0; v < verts.size(); ++v) {
        int vi = static_cast<int>(v);
        if (vi == start || !allowed(within, vi)) continue;
        if (dot(d.primary, verts[v]) == dmin &&
            objective_compare(c, verts[v], verts[start]) > 0)
            throw PreconditionError("coherent path: vertex " + std::to_string(vi) +
                                    " is c-better on the d-minimal face than the start");
    }
}

// Shared tracer. `require_c_improving` = false gives the full d-monotone
// sweep, true the both-improving rule.
PathTrace trace_coherent(const EdgeGraph& g, const std::vector<QVec>& verts, const Objective& c,
                         const Objective& d, int start, const VertexMask* within,
                         const FaceSpec& face_ctx, bool require_c_improving, const char* rule) {
    check_coherent_start(verts, c, d, start, within);

    PathTrace t;
    t.vertices.push_back(start);
    t.declared_bound = distinct_value_count(d.primary, verts, within) - 1;

    int cur = start;
    while (true) {
        QVec cur_tuple = c.value_tuple(verts[cur]);
        int best = -1;
        QVec best_gains;
        Rat best_dgain;
        for (int u : g.adj[cur]) {
            if (!allowed(within, u)) continue;
            Rat dgain = dot(d.primary, verts[u]) - dot(d.primary, verts[cur]);
            if (dgain <= 0) continue;
            QVec tuple = c.value_tuple(verts[u]);
            QVec gains(tuple.size());
            for (std::size_t i = 0; i < tuple.size(); ++i) gains[i] = tuple[i] - cur_tuple[i];
            if (require_c_improving && lex_cmp(tuple, cur_tuple) <= 0) continue;
            if (best < 0) {
                best = u;
                best_gains = std::move(gains);
                best_dgain = dgain;
                continue;
            }
            // The gain ratio is compared lexicographically over the whole
            // perturbation tuple (the symbolic-perturbation limit of the
            // real shadow slope), by cross-multiplication with the positive
            // denominators. Comparing primary ratios only and breaking ties
            // by tuple can strand the walk on a shadow-degenerate edge where
            // c and d both tie, short of the perturbed optimum.
            int rc = 0;
            for (std::size_t i = 0; i < gains.size() && rc == 0; ++i)
                rc = cmp(gains[i] * best_dgain, best_gains[i] * dgain);
            if (rc < 0) continue;
            if (rc == 0) {
                int cc = objective_compare(c, verts[u], verts[best]);
                if (cc < 0 || (cc == 0 && u > best)) continue;
            }
            best = u;
            best_gains = std::move(gains);
            best_dgain = dgain;
        }
        if (best < 0) break;
        t.steps.push_back(PathStep{rule, d.primary, face_ctx});
        t.vertices.push_back(best);
        cur = best;
    }

    if (Int(t.length()) > t.declared_bound)
        throw InternalError("coherent path exceeded its distinct-value bound");
    return t;
}

}  // namespace

PathTrace coherent_path(const EdgeGraph& g, const std::vector<QVec>& verts, const Objective& c,
                        const Objective& d, int start, const VertexMask* within,
                        const FaceSpec& face_ctx) {
    return trace_coherent(g, verts, c, d, start, within, face_ctx, true, "coherent");
}

PathTrace coherent_sweep(const EdgeGraph& g, const std::vector<QVec>& verts, const Objective& c,
                         const Objective& d, int start, const VertexMask* within,
                         const FaceSpec& face_ctx) {
    return trace_coherent(g, verts, c, d, start, within, face_ctx, false, "coherent_sweep");
}

Objective lattice_shadow_objective(const Polytope& p, int start_vertex) {
    if (start_vertex < 0 || start_vertex >= p.num_vertices())
        throw PreconditionError("lattice_shadow_objective: bad vertex index");
    const QMat& dirs = p.direction_basis();

    // Greedy scan of canonically ordered tight rows; independence is judged
    // on the restrictions to the direction space so affine-hull rows (zero
    // restriction) can never be picked.
    QMat picked_proj;
    QVec d(p.n(), Rat(0));
    int picked = 0;
    for (std::size_t r = 0; r < p.hrep().rows.size() && picked < p.dim(); ++r) {
        if (!p.row_tight_at(static_cast<int>(r), start_vertex)) continue;
        QVec proj(dirs.size());
        for (std::size_t j = 0; j < dirs.size(); ++j) proj[j] = dot(p.hrep().rows[r].normal, dirs[j]);
        QMat trial = picked_proj;
        trial.push_back(proj);
        if (rank(std::move(trial)) != picked + 1) continue;
        picked_proj.push_back(std::move(proj));
        for (int j = 0; j < p.n(); ++j) d[j] -= Rat(p.hrep().rows[r].normal[j]);
        ++picked;
    }
    if (picked != p.dim())
        throw InternalError("lattice_shadow_objective: tight rows do not span the direction space");
    return Objective{std::move(d), {}};
}

PathTrace greatest_improvement_path(const EdgeGraph& g, const std::vector<QVec>& verts,
                                    const Objective& o, int start, const VertexMask* within) {
    if (start < 0 || start >= static_cast<int>(verts.size()) || !allowed(within, start))
        throw PreconditionError("greatest improvement: start is not a visible vertex");
    PathTrace t;
    t.vertices.push_back(start);

    std::size_t visible = 0;
    for (std::size_t v = 0; v < verts.size(); ++v)
        if (allowed(within, static_cast<int>(v))) ++visible;
    t.declared_bound = Int(visible) - 1;

    int cur = start;
    while (true) {
        int best = cur;
        for (int u : g.adj[cur]) {
            if (!allowed(within, u)) continue;
            int c = objective_compare(o, verts[u], verts[best]);
            if (c > 0 || (c == 0 && best != cur && u < best)) best = u;
        }
        if (best == cur || objective_compare(o, verts[best], verts[cur]) <= 0) break;
        t.steps.push_back(PathStep{"greatest_improvement", o.primary, FaceSpec{}});
        t.vertices.push_back(best);
        cur = best;
    }
    return t;
}

SigmaFlag sigma_flag(const Polytope& p, const SignedPermutation& sigma) {
    if (!sigma.valid() || sigma.n() != p.n())
        throw PreconditionError("sigma_flag: invalid signed permutation");
    SigmaFlag flag;
    std::vector<int> cur(p.num_vertices());
    for (int v = 0; v < p.num_vertices(); ++v) cur[v] = v;
    flag.faces.push_back(p.face_spec_of(cur));
    flag.face_vertices.push_back(cur);

    for (int i = p.n(); i >= 1; --i) {
        int pre = sigma.preimage(i);
        int coord = pre < 0 ? -pre : pre;
        int sign = pre < 0 ? -1 : 1;
        Rat best;
        bool first = true;
        for (int v : cur) {
            Rat val = Rat(sign) * p.vertex(v)[coord - 1];
            if (first || val > best) {
                best = val;
                first = false;
            }
        }
        std::vector<int> nxt;
        for (int v : cur)
            if (Rat(sign) * p.vertex(v)[coord - 1] == best) nxt.push_back(v);
        cur = std::move(nxt);
        flag.faces.push_back(p.face_spec_of(cur));
        flag.face_vertices.push_back(cur);
    }
    if (cur.size() != 1) throw InternalError("sigma_flag: G_0 is not a single vertex");
    flag.g0 = cur[0];
    return flag;
}

}  // namespace latpath
