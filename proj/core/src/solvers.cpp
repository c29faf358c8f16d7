#include "latpath/solvers.hpp"

#include <algorithm>

namespace latpath {

namespace {

Int require_box_k(const Polytope& p, const char* who) {
    if (!p.vrep().box_k)
        throw PreconditionError(std::string(who) + ": requires a (0,k)-lattice polytope");
    return *p.vrep().box_k;
}

void check_start(const Polytope& p, int start, const char* who) {
    if (start < 0 || start >= p.num_vertices())
        throw PreconditionError(std::string(who) + ": start is not a vertex index");
}

std::vector<int> independent_tight_rows(const Polytope& p, int v) {
    const QMat& dirs = p.direction_basis();
    QMat picked_proj;
    std::vector<int> rows;
    for (std::size_t r = 0; r < p.hrep().rows.size() && static_cast<int>(rows.size()) < p.dim();
         ++r) {
        if (!p.row_tight_at(static_cast<int>(r), v)) continue;
        QVec proj(dirs.size());
        for (std::size_t j = 0; j < dirs.size(); ++j) proj[j] = dot(p.hrep().rows[r].normal, dirs[j]);
        QMat trial = picked_proj;
        trial.push_back(proj);
        if (rank(std::move(trial)) != static_cast<int>(rows.size()) + 1) continue;
        picked_proj.push_back(std::move(proj));
        rows.push_back(static_cast<int>(r));
    }
    if (static_cast<int>(rows.size()) != p.dim())
        throw InternalError("tight rows at a vertex do not span the direction space");
    return rows;
}

VertexMask mask_of(const std::vector<int>& ids, int n_vertices) {
    VertexMask m(n_vertices, 0);
    for (int i : ids) m[i] = 1;
    return m;
}

}  // namespace

bool SolveReport::all_bounds_ok() const {
    for (const BoundCheck& b : bound_checks)
        if (!b.ok()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Half-integral solver
// ---------------------------------------------------------------------------

namespace {

template <typename Pred>
bool coords_in(const std::vector<QVec>& verts, Pred pred) {
    for (const QVec& v : verts)
        for (const Rat& x : v)
            if (!pred(x)) return false;
    return true;
}

// Recenter vertices into {-1,0,1}^n. Accepts already centered sets, the
// half-integral box {0,1/2,1}^n (y = 2x-1) and its doubling {0,1,2}^n
// (y = x-1). Order comparisons under any c are unchanged by these maps.
std::vector<QVec> half_integral_chart(const std::vector<QVec>& verts) {
    if (coords_in(verts, [](const Rat& x) { return x == -1 || x == 0 || x == 1; })) return verts;
    std::vector<QVec> out(verts.size());
    if (coords_in(verts, [](const Rat& x) { return x == 0 || x == Rat(1, 2) || x == 1; })) {
        for (std::size_t v = 0; v < verts.size(); ++v) {
            out[v].reserve(verts[v].size());
            for (const Rat& x : verts[v]) out[v].push_back(2 * x - 1);
        }
        return out;
    }
    if (coords_in(verts, [](const Rat& x) { return x == 0 || x == 1 || x == 2; })) {
        for (std::size_t v = 0; v < verts.size(); ++v) {
            out[v].reserve(verts[v].size());
            for (const Rat& x : verts[v]) out[v].push_back(x - 1);
        }
        return out;
    }
    throw PreconditionError("solve_half_integral: vertices are not half-integral");
}

int support_size(const QVec& x) {
    int s = 0;
    for (const Rat& c : x)
        if (c != 0) ++s;
    return s;
}

}  // namespace

bool is_half_integral_vertex_set(const std::vector<QVec>& verts) {
    return coords_in(verts, [](const Rat& x) { return x == -1 || x == 0 || x == 1; }) ||
           coords_in(verts, [](const Rat& x) { return x == 0 || x == Rat(1, 2) || x == 1; }) ||
           coords_in(verts, [](const Rat& x) { return x == 0 || x == 1 || x == 2; });
}

SolveReport solve_half_integral(const Polytope& p, const EdgeGraph& g, const Objective& c,
                                int start) {
    check_start(p, start, "solve_half_integral");
    const int n = p.n();
    const int d = p.dim();
    std::vector<QVec> chart = half_integral_chart(p.vertices());

    SolveReport rep;
    rep.trace.vertices.push_back(start);

    // Support phase: fix the support of the current vertex, look for a
    // c-improving neighbor on the fixed-coordinate face, repeat. Each move
    // lands in a strictly smaller face, so there are at most d moves.
    int cur = start;
    int support_steps = 0;
    while (true) {
        std::vector<int> supp;
        for (int j = 0; j < n; ++j)
            if (chart[cur][j] != 0) supp.push_back(j);
        std::vector<int> face_ids;
        for (int v = 0; v < p.num_vertices(); ++v) {
            bool agrees = true;
            for (int j : supp)
                if (chart[v][j] != chart[cur][j]) {
                    agrees = false;
                    break;
                }
            if (agrees) face_ids.push_back(v);
        }
        VertexMask face = mask_of(face_ids, p.num_vertices());
        int best = -1;
        for (int u : g.adj[cur]) {
            if (!face[u]) continue;
            if (objective_compare(c, chart[u], chart[cur]) <= 0) continue;
            if (best < 0 || objective_compare(c, chart[u], chart[best]) > 0) best = u;
        }
        if (best < 0) break;  // c-maximal on its fixed-support face
        rep.trace.steps.push_back(
            PathStep{"support_fix", c.primary, p.face_spec_of(face_ids)});
        rep.trace.vertices.push_back(best);
        cur = best;
        ++support_steps;
        if (support_steps > d) throw InternalError("support phase exceeded d steps");
    }

    // Shadow phase against minus the reached vertex.
    QVec dvec(n);
    for (int j = 0; j < n; ++j) dvec[j] = -chart[cur][j];
    const int supp_vk = support_size(chart[cur]);
    Objective aux{dvec, {}};
    PathTrace shadow = coherent_path(g, chart, c, aux, cur);
    rep.trace.append(shadow);

    const Int total(rep.trace.length());
    rep.trace.declared_bound = Int(d) + 2 * Int(n);
    rep.bound_checks.push_back({"half_integral_d_plus_2n", Int(d) + 2 * Int(n), total});
    if (d == n) rep.bound_checks.push_back({"half_integral_3d", 3 * Int(d), total});
    rep.bound_checks.push_back({"half_integral_d_plus_2supp", Int(d) + 2 * Int(supp_vk), total});

    bool uniform = true;
    for (const QVec& v : chart)
        if (support_size(v) != supp_vk) {
            uniform = false;
            break;
        }
    if (uniform) {
        if (support_steps != 0)
            throw InternalError("uniform-support instance took support-phase steps");
        rep.bound_checks.push_back({"uniform_support_2s", 2 * Int(supp_vk), total});
    }

    rep.optimum = rep.trace.end();
    rep.sub_lp_count = 1;
    validate_walk(rep.trace, g);
    validate_monotone(rep.trace, c, p.vertices());
    return rep;
}

// ---------------------------------------------------------------------------
// Level solver
// ---------------------------------------------------------------------------

SolveReport solve_level(const Polytope& p, const EdgeGraph& g, const Objective& c, int start) {
    check_start(p, start, "solve_level");
    const int d = p.dim();
    const Int m = Int(level_profile(p).overall) - 1;
    std::vector<int> rows = independent_tight_rows(p, start);

    SolveReport rep;
    rep.trace.vertices.push_back(start);
    int cur = start;
    for (int i = d; i >= 1; --i) {
        // F_{i-1}: the first i-1 picked rows forced to equality.
        FaceSpec spec;
        spec.equality_rows.assign(rows.begin(), rows.begin() + (i - 1));
        std::vector<int> ids = p.face_vertex_indices(spec);
        VertexMask face = mask_of(ids, p.num_vertices());
        QVec dvec(p.n());
        for (int j = 0; j < p.n(); ++j) dvec[j] = -Rat(p.hrep().rows[rows[i - 1]].normal[j]);
        PathTrace leg = coherent_path(g, p.vertices(), c, Objective{dvec, {}}, cur, &face, spec);
        if (Int(leg.length()) > m) throw InternalError("level-solver leg exceeded m steps");
        rep.trace.append(leg);
        cur = rep.trace.end();
        ++rep.sub_lp_count;
    }

    rep.trace.declared_bound = Int(d - 1) * m + 1;
    rep.bound_checks.push_back({"level_dm_plus_1", Int(d - 1) * m + 1, Int(rep.trace.length())});
    rep.optimum = cur;
    validate_walk(rep.trace, g);
    validate_monotone(rep.trace, c, p.vertices());
    return rep;
}

// ---------------------------------------------------------------------------
// Adaptive descent and the sigma-max path
// ---------------------------------------------------------------------------

DescentResult adaptive_sigma_descent(const Polytope& p, const EdgeGraph& g, int start) {
    check_start(p, start, "adaptive_sigma_descent");
    const Int k = require_box_k(p, "adaptive_sigma_descent");
    const int n = p.n();
    const Int half_k = k / 2;

    DescentResult res;
    res.sigma.sigma.assign(n, 0);
    res.trace.vertices.push_back(start);

    std::vector<int> cur_ids(p.num_vertices());
    for (int v = 0; v < p.num_vertices(); ++v) cur_ids[v] = v;
    std::vector<char> fixed(n, 0);
    int cur = start;

    for (int weight = n; weight >= 1; --weight) {
        // Pick the unfixed coordinate closest to either boundary of [0,k];
        // ties go to the lower coordinate, and to the k side.
        int pick = -1, sign = 1;
        Int best_dist;
        for (int j = 0; j < n; ++j) {
            if (fixed[j]) continue;
            const Rat& xj = p.vertex(cur)[j];
            if (!is_integer(xj) || xj < 0 || xj > k)
                throw InternalError("descent: coordinate outside the lattice box");
            Int to0 = num(xj);
            Int tok = k - num(xj);
            Int dist = std::min(to0, tok);
            if (pick < 0 || dist < best_dist) {
                pick = j;
                best_dist = dist;
                sign = (tok <= to0) ? 1 : -1;
            }
        }
        fixed[pick] = 1;
        res.sigma.sigma[pick] = sign * weight;

        // Walk strictly coordinate-improving edges inside the current face,
        // lowest vertex index first, until the coordinate is maximal.
        FaceSpec ctx = p.face_spec_of(cur_ids);
        VertexMask face = mask_of(cur_ids, p.num_vertices());
        QVec aux(n, Rat(0));
        aux[pick] = Rat(sign);
        int leg_steps = 0;
        while (true) {
            int next = -1;
            for (int u : g.adj[cur]) {
                if (!face[u]) continue;
                if (Rat(sign) * (p.vertex(u)[pick] - p.vertex(cur)[pick]) > 0) {
                    next = u;
                    break;  // neighbor lists are sorted: lowest index first
                }
            }
            if (next < 0) break;
            res.trace.steps.push_back(PathStep{"bland_coordinate", aux, ctx});
            res.trace.vertices.push_back(next);
            cur = next;
            ++leg_steps;
        }
        if (Int(leg_steps) > half_k)
            throw InternalError("descent leg exceeded floor(k/2) steps");

        Rat best_val;
        bool first = true;
        for (int v : cur_ids) {
            Rat val = Rat(sign) * p.vertex(v)[pick];
            if (first || val > best_val) {
                best_val = val;
                first = false;
            }
        }
        if (Rat(sign) * p.vertex(cur)[pick] != best_val)
            throw InternalError("descent leg stopped before the coordinate maximum");
        std::vector<int> next_ids;
        for (int v : cur_ids)
            if (Rat(sign) * p.vertex(v)[pick] == best_val) next_ids.push_back(v);
        if (next_ids.size() != cur_ids.size()) ++res.sub_lp_count;
        cur_ids = std::move(next_ids);
    }

    if (cur_ids.size() != 1 || cur_ids[0] != cur)
        throw InternalError("descent did not pin a single vertex");
    if (sigma_flag(p, res.sigma).g0 != cur)
        throw InternalError("descent endpoint is not the x_sigma-maximal vertex");
    res.trace.declared_bound = Int(p.dim()) * half_k;
    validate_walk(res.trace, g);
    return res;
}

SolveReport path_from_sigma_max(const Polytope& p, const EdgeGraph& g,
                                const SignedPermutation& sigma, const Objective& c) {
    const Int k = require_box_k(p, "path_from_sigma_max");
    const int n = p.n();
    SigmaFlag flag = sigma_flag(p, sigma);

    SolveReport rep;
    rep.trace.vertices.push_back(flag.g0);
    int cur = flag.g0;
    for (int i = 1; i <= n; ++i) {
        const std::vector<int>& gi = flag.face_vertices[n - i];        // G_i
        const std::vector<int>& gprev = flag.face_vertices[n - i + 1]; // G_{i-1}
        if (gi == gprev) continue;  // repeated face: no sub-LP
        int pre = sigma.preimage(i);
        int coord = (pre < 0 ? -pre : pre) - 1;
        QVec dvec(n, Rat(0));
        dvec[coord] = Rat(pre < 0 ? 1 : -1);  // d = -e_{sigma^{-1}(i)}, sign folded
        VertexMask face = mask_of(gi, p.num_vertices());
        PathTrace leg =
            coherent_path(g, p.vertices(), c, Objective{dvec, {}}, cur, &face, flag.faces[n - i]);
        if (Int(leg.length()) > k) throw InternalError("sigma-max leg exceeded k steps");
        rep.trace.append(leg);
        cur = rep.trace.end();
        ++rep.sub_lp_count;
    }
    if (rep.sub_lp_count > p.dim())
        throw InternalError("more distinct flag legs than the dimension");

    rep.trace.declared_bound = Int(p.dim()) * k;
    rep.bound_checks.push_back({"sigma_start_dk", Int(p.dim()) * k, Int(rep.trace.length())});
    rep.optimum = cur;
    validate_walk(rep.trace, g);
    validate_monotone(rep.trace, c, p.vertices());
    return rep;
}

// ---------------------------------------------------------------------------
// Lattice shadow solve
// ---------------------------------------------------------------------------

SolveReport lattice_shadow_solve(const Polytope& p, const EdgeGraph& g, const Objective& c,
                                 int start) {
    check_start(p, start, "lattice_shadow_solve");
    const Int k = require_box_k(p, "lattice_shadow_solve");
    Objective d = lattice_shadow_objective(p, start);

    // d is minimized uniquely at the start, which therefore satisfies the
    // coherent start condition outright.
    for (int v = 0; v < p.num_vertices(); ++v)
        if (v != start && dot(d.primary, p.vertex(v)) <= dot(d.primary, p.vertex(start)))
            throw InternalError("shadow objective is not uniquely minimized at the start");

    SolveReport rep;
    rep.trace = coherent_path(g, p.vertices(), c, d, start);

    Int d_inf = 0;
    for (const Rat& x : d.primary) {
        if (!is_integer(x)) throw InternalError("shadow objective is not integral");
        Int a = boost::multiprecision::abs(num(x));
        if (a > d_inf) d_inf = a;
    }
    const Int a_inf = matrix_metrics(p.hrep(), false).a_inf;
    const Int steps(rep.trace.length());
    rep.bound_checks.push_back({"shadow_dnk_ainf", Int(p.dim()) * p.n() * k * a_inf, steps});
    rep.bound_checks.push_back({"shadow_dinf_nk", d_inf * p.n() * k, steps});
    rep.bound_checks.push_back({"shadow_dinf_le_dim_ainf", Int(p.dim()) * a_inf, d_inf});
    rep.optimum = rep.trace.end();
    rep.sub_lp_count = 1;
    validate_walk(rep.trace, g);
    validate_monotone(rep.trace, c, p.vertices());
    return rep;
}

// ---------------------------------------------------------------------------
// Two-phase solver
// ---------------------------------------------------------------------------

SolveReport solve_lattice_lp(const Polytope& p, const EdgeGraph& g, const Objective& c,
                             int start) {
    check_start(p, start, "solve_lattice_lp");
    const Int k = require_box_k(p, "solve_lattice_lp");
    const Int half_k = k / 2;
    const int d = p.dim();

    DescentResult phase_a = adaptive_sigma_descent(p, g, start);
    SolveReport phase_b = path_from_sigma_max(p, g, phase_a.sigma, c);
    if (phase_b.trace.start() != phase_a.trace.end())
        throw InternalError("phase B does not start where phase A ended");

    SolveReport rep;
    rep.trace = phase_a.trace;
    rep.trace.append(phase_b.trace);
    rep.trace.declared_bound = Int(d) * (k + half_k);
    rep.sub_lp_count = phase_a.sub_lp_count + phase_b.sub_lp_count;

    rep.bound_checks.push_back({"two_phase_total", Int(d) * (k + half_k), Int(rep.trace.length())});
    rep.bound_checks.push_back({"descent_d_half_k", Int(d) * half_k, Int(phase_a.trace.length())});
    rep.bound_checks.push_back({"sigma_start_dk", Int(d) * k, Int(phase_b.trace.length())});
    rep.bound_checks.push_back({"sub_lp_2n", 2 * Int(p.n()), Int(rep.sub_lp_count)});
    rep.optimum = phase_b.optimum;
    validate_walk(rep.trace, g);  // the concatenation is a walk, not monotone
    return rep;
}

// ---------------------------------------------------------------------------
// Greatest improvement toward the x_sigma maximum
// ---------------------------------------------------------------------------

SolveReport solve_greatest_improvement(const Polytope& p, const EdgeGraph& g,
                                       const SignedPermutation& sigma, int start) {
    check_start(p, start, "solve_greatest_improvement");
    const Int k = require_box_k(p, "solve_greatest_improvement");
    Objective o{build_x_sigma(sigma, k, 2 * k + 1), {}};

    SolveReport rep;
    rep.trace = greatest_improvement_path(g, p.vertices(), o, start);
    rep.trace.declared_bound = Int(p.dim()) * k;
    rep.bound_checks.push_back({"greatest_improvement_dk", Int(p.dim()) * k, Int(rep.trace.length())});
    rep.optimum = rep.trace.end();
    rep.sub_lp_count = 1;
    if (rep.optimum != sigma_flag(p, sigma).g0)
        throw InternalError("greatest improvement did not reach the x_sigma maximum");
    validate_walk(rep.trace, g);
    validate_monotone(rep.trace, o, p.vertices());
    return rep;
}

}  // namespace latpath
