#include "latpath/oracle.hpp"

#include <algorithm>
#include <queue>

namespace latpath {

OrientationDigraph orient(const EdgeGraph& g, const std::vector<QVec>& verts, const Objective& o) {
    OrientationDigraph d;
    d.n_vertices = g.n_vertices;
    d.out.assign(g.n_vertices, {});
    std::vector<int> indeg(g.n_vertices, 0);
    for (int u = 0; u < g.n_vertices; ++u)
        for (int v : g.adj[u]) {
            if (v < u) continue;
            int c = objective_compare(o, verts[u], verts[v]);
            if (c == 0)
                throw PreconditionError("orient: objective ties on an edge; perturb it");
            int from = c < 0 ? u : v, to = c < 0 ? v : u;
            d.out[from].push_back(to);
            ++indeg[to];
        }
    // Arcs follow a fixed order on value tuples, so the digraph is acyclic;
    // a second sink would be a second local (hence global) maximum.
    for (int v = 0; v < g.n_vertices; ++v) {
        if (d.out[v].empty()) {
            if (d.sink >= 0) throw InternalError("orientation has two sinks");
            d.sink = v;
        }
        if (indeg[v] == 0) {
            if (d.source >= 0) throw InternalError("orientation has two sources");
            d.source = v;
        }
    }
    if (d.sink < 0 || d.source < 0) throw InternalError("orientation lacks a sink or source");
    return d;
}

Optimum brute_force_optimum(const std::vector<QVec>& verts, const Objective& o) {
    if (verts.empty()) throw PreconditionError("brute_force_optimum: empty vertex list");
    Optimum best{0, true};
    for (int v = 1; v < static_cast<int>(verts.size()); ++v) {
        int c = objective_compare(o, verts[v], verts[best.index]);
        if (c > 0) {
            best.index = v;
            best.unique = true;
        } else if (c == 0) {
            best.unique = false;
        }
    }
    return best;
}

int shortest_monotone_distance(const EdgeGraph& g, const std::vector<QVec>& verts,
                               const Objective& o, int from) {
    OrientationDigraph d = orient(g, verts, o);
    if (from < 0 || from >= g.n_vertices)
        throw PreconditionError("shortest_monotone_distance: bad start index");
    std::vector<int> dist(g.n_vertices, -1);
    std::queue<int> q;
    dist[from] = 0;
    q.push(from);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (u == d.sink) return dist[u];
        for (int v : d.out[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    throw InternalError("sink unreachable by monotone paths");
}

// ---------------------------------------------------------------------------
// Monotone diameter estimation
// ---------------------------------------------------------------------------

namespace {

int worst_distance(const EdgeGraph& g, const std::vector<QVec>& verts, const Objective& o,
                   int* worst_vertex) {
    int worst = -1;
    for (int v = 0; v < g.n_vertices; ++v) {
        int d = shortest_monotone_distance(g, verts, o, v);
        if (d > worst) {
            worst = d;
            if (worst_vertex) *worst_vertex = v;
        }
    }
    return worst;
}

}  // namespace

DiameterEstimate monotone_diameter_sampled(const Polytope& p, const EdgeGraph& g, int count,
                                           std::uint64_t seed) {
    if (count < 1) throw PreconditionError("sampled diameter: count must be positive");
    // Independent substreams keep a smaller sample a strict prefix of a larger
    // one, so the estimate is nondecreasing in the count for a fixed seed.
    Xorshift64Star rng(seed);
    Xorshift64Star sigma_rng(seed ^ 0x51AF3B6C9D2E4F01ULL);
    std::vector<Objective> objectives;
    for (int i = 0; i < count; ++i) {
        QVec c(p.n());
        for (int j = 0; j < p.n(); ++j) c[j] = Rat(Int(rng.range(-9, 9)));
        objectives.push_back(with_tiebreak(Objective{std::move(c), {}}, p.vertices()));
    }
    if (p.vrep().box_k) {
        const Int k = *p.vrep().box_k;
        const Int alpha = 2 * k + 1;
        std::vector<SignedPermutation> sample{SignedPermutation::identity(p.n())};
        const int extra = count / 10 + 1;
        for (int i = 0; i < extra; ++i)
            sample.push_back(random_signed_permutation(p.n(), sigma_rng));
        for (const SignedPermutation& s : sample) {
            QVec w = build_x_sigma(s, k, alpha);
            QVec neg(w.size());
            for (std::size_t j = 0; j < w.size(); ++j) neg[j] = -w[j];
            objectives.push_back(with_tiebreak(Objective{w, {}}, p.vertices()));
            objectives.push_back(with_tiebreak(Objective{neg, {}}, p.vertices()));
        }
    }

    DiameterEstimate est;
    for (const Objective& o : objectives) {
        int wv = -1;
        int d = worst_distance(g, p.vertices(), o, &wv);
        if (d > est.value) {
            est.value = d;
            est.witness_objective = o;
            est.witness_vertex = wv;
        }
    }
    return est;
}

namespace {

std::vector<std::pair<int, int>> canonical_edges(const EdgeGraph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n_vertices; ++u)
        for (int v : g.adj[u])
            if (u < v) edges.emplace_back(u, v);
    std::sort(edges.begin(), edges.end());
    return edges;
}

// Is there a c in the unit box with c.(head - tail) > 0 for the first
// `assigned` edges? Decided exactly by maximizing the slack coordinate t over
//   Q = { (c,t) : -c.w_e + t <= 0, -1 <= c_i <= 1, -1 <= t <= B }
// with the library's own vertex enumeration; the strict system is solvable
// iff max t > 0, and the maximizer's c part is a realizing objective.
std::optional<QVec> realizing_objective(const std::vector<QVec>& verts,
                                        const std::vector<std::pair<int, int>>& edges,
                                        const std::vector<int>& signs, int assigned, int n) {
    HRep q;
    q.n = n + 1;
    Rat ceiling = 1;
    for (int e = 0; e < assigned; ++e) {
        auto [u, v] = edges[e];
        int head = signs[e] > 0 ? v : u;
        int tail = signs[e] > 0 ? u : v;
        QVec row(n + 1, Rat(0));
        Rat span = 1;
        for (int j = 0; j < n; ++j) {
            row[j] = verts[tail][j] - verts[head][j];  // encodes  t <= c.(head-tail)
            span += boost::multiprecision::abs(verts[head][j] - verts[tail][j]);
        }
        row[n] = 1;
        if (span > ceiling) ceiling = span;
        q.rows.push_back(canonical_row(row, Rat(0)));
    }
    for (int j = 0; j < n; ++j) {
        QVec up(n + 1, Rat(0)), down(n + 1, Rat(0));
        up[j] = 1;
        down[j] = -1;
        q.rows.push_back(canonical_row(up, Rat(1)));
        q.rows.push_back(canonical_row(down, Rat(1)));
    }
    QVec tup(n + 1, Rat(0)), tdown(n + 1, Rat(0));
    tup[n] = 1;
    tdown[n] = -1;
    q.rows.push_back(canonical_row(tup, ceiling));
    q.rows.push_back(canonical_row(tdown, Rat(1)));

    VRep vr = enumerate_vertices(q);
    const QVec* best = nullptr;
    for (const QVec& x : vr.vertices)
        if (!best || x[n] > (*best)[n]) best = &x;
    if (!best || (*best)[n] <= 0) return std::nullopt;
    return QVec(best->begin(), best->begin() + n);
}

}  // namespace

DiameterEstimate monotone_diameter_exact_tiny(const Polytope& p, const EdgeGraph& g) {
    if (p.n() > 3 || p.num_vertices() > 12)
        throw PreconditionError("exact-tiny diameter refused: instance too large");
    const std::vector<std::pair<int, int>> edges = canonical_edges(g);
    const int m = static_cast<int>(edges.size());
    const int n = p.n();

    DiameterEstimate est;
    std::vector<int> signs(m, 0);

    // Depth-first over sign patterns with chamber pruning: a partial pattern
    // with no realizing objective has no realizable completion.
    auto recurse = [&](auto&& self, int depth) -> void {
        std::optional<QVec> witness = realizing_objective(p.vertices(), edges, signs, depth, n);
        if (!witness) return;
        if (depth == m) {
            ++est.orientations;
            std::string pat(m, '+');
            for (int e = 0; e < m; ++e)
                if (signs[e] < 0) pat[e] = '-';
            est.orientation_patterns.push_back(std::move(pat));

            Objective o{*witness, {}};  // edge-strict by construction
            int wv = -1;
            int dist = worst_distance(g, p.vertices(), o, &wv);
            if (dist > est.value) {
                est.value = dist;
                est.witness_objective = o;
                est.witness_vertex = wv;
            }
            return;
        }
        signs[depth] = 1;
        self(self, depth + 1);
        signs[depth] = -1;
        self(self, depth + 1);
        signs[depth] = 0;
    };
    recurse(recurse, 0);
    if (est.orientations == 0) throw InternalError("no realizable orientation found");
    return est;
}

// ---------------------------------------------------------------------------
// Exhaustive lexicographic-order verification
// ---------------------------------------------------------------------------

LexOrderReport verify_lex_order(int n, const Int& k, const Int& alpha) {
    if (n < 1 || n > 3 || k < 1 || k > 3 || alpha < 1 || alpha > 1000)
        throw PreconditionError("verify_lex_order: exhaustive scale is n <= 3, k <= 3");

    const long long kk = k.convert_to<long long>();
    std::vector<IVec> points;
    {
        IVec p(n, Int(-kk));
        while (true) {
            points.push_back(p);
            int j = 0;
            while (j < n && p[j] == kk) {
                p[j] = -kk;
                ++j;
            }
            if (j == n) break;
            p[j] += 1;
        }
    }

    LexOrderReport rep;
    rep.pairs_per_sigma = static_cast<long long>(points.size()) * points.size();
    std::vector<SignedPermutation> sigmas = all_signed_permutations(n);
    rep.sigma_count = static_cast<long long>(sigmas.size());

    for (const SignedPermutation& sigma : sigmas) {
        // x_sigma weights without the alpha >= 2k+1 gate: probing below the
        // hypothesis is the point of the sharpness check.
        IVec w(n);
        for (int i = 1; i <= n; ++i) {
            int s = sigma.image(i);
            int a = s < 0 ? -s : s;
            Int pw = 1;
            for (int t = 0; t < a; ++t) pw *= alpha;
            w[i - 1] = s < 0 ? Int(-pw) : pw;
        }
        // Cache dot products and sign-adjusted lexicographic keys (scan order
        // sigma^{-1}(n) .. sigma^{-1}(1)) as native integers; the exhaustive
        // ranges are tiny.
        std::vector<int> pre(n);
        for (int j = 1; j <= n; ++j) pre[j - 1] = sigma.preimage(j);
        std::vector<long long> dots(points.size());
        std::vector<std::vector<long long>> keys(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) {
            dots[i] = dot(w, points[i]).convert_to<long long>();
            std::vector<long long> key(n);
            for (int j = n; j >= 1; --j) {
                int pr = pre[j - 1];
                int coord = pr < 0 ? -pr : pr;
                long long val = points[i][coord - 1].convert_to<long long>();
                key[n - j] = pr < 0 ? -val : val;
            }
            keys[i] = std::move(key);
        }
        for (std::size_t i = 0; i < points.size(); ++i) {
            for (std::size_t j = 0; j < points.size(); ++j) {
                int dot_sign = dots[i] < dots[j] ? -1 : (dots[i] > dots[j] ? 1 : 0);
                int lex_sign = keys[i] < keys[j] ? -1 : (keys[j] < keys[i] ? 1 : 0);
                if (dot_sign != lex_sign) {
                    rep.pass = false;
                    rep.counterexample = LexCounterexample{sigma, points[i], points[j]};
                    return rep;
                }
            }
        }
    }
    rep.pass = true;
    return rep;
}

}  // namespace latpath
