#include "latpath/polytope.hpp"

#include <algorithm>
#include <map>

namespace latpath {

namespace {

// Visit all k-subsets of {0..m-1} in lexicographic order.
template <typename F>
void for_each_subset(int m, int k, F visit) {
    if (k < 0 || k > m) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        visit(const_cast<const std::vector<int>&>(idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

QMat difference_matrix(const std::vector<QVec>& pts) {
    QMat diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        QVec d(pts[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
        diffs.push_back(std::move(d));
    }
    return diffs;
}

int affine_rank(const std::vector<QVec>& pts) {
    if (pts.size() <= 1) return 0;
    return rank(difference_matrix(pts));
}

}  // namespace

int cmp(const HRow& a, const HRow& b) {
    int c = lex_cmp(a.normal, b.normal);
    if (c != 0) return c;
    return cmp(a.rhs, b.rhs);
}

HRow canonical_row(const QVec& normal, const Rat& rhs) {
    Int l = 1;
    for (const Rat& x : normal) l = boost::multiprecision::lcm(l, den(x));
    l = boost::multiprecision::lcm(l, den(rhs));
    IVec in(normal.size());
    for (std::size_t i = 0; i < normal.size(); ++i) in[i] = num(normal[i]) * (l / den(normal[i]));
    Int ir = num(rhs) * (l / den(rhs));
    IVec all = in;
    all.push_back(ir);
    Int g = content(all);
    if (g > 1) {
        for (Int& x : in) x /= g;
        ir /= g;
    }
    return HRow{std::move(in), std::move(ir)};
}

Rat HRep::slack(int row, const QVec& x) const {
    return Rat(rows[row].rhs) - dot(rows[row].normal, x);
}

bool HRep::feasible(const QVec& x) const {
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (slack(static_cast<int>(r), x) < 0) return false;
    return true;
}

std::optional<Int> lattice_box_k(const std::vector<QVec>& vertices) {
    Int k = 0;
    for (const QVec& v : vertices)
        for (const Rat& x : v) {
            if (!is_integer(x) || x < 0) return std::nullopt;
            if (num(x) > k) k = num(x);
        }
    return k;
}

// ---------------------------------------------------------------------------
// Vertex enumeration
// ---------------------------------------------------------------------------

namespace {

struct EnumCore {
    std::vector<QVec> vertices;
    bool bounded = true;
};

// Assumes rank(A) == n. Candidate vertices come from invertible n-subsets of
// rows; boundedness is decided by searching the recession cone {u : Au <= 0}
// for an extreme ray, each of which has n-1 independent tight rows.
EnumCore enumerate_full_rank(const HRep& h) {
    const int n = h.n;
    const int m = static_cast<int>(h.rows.size());
    EnumCore out;

    std::vector<QVec> cands;
    for_each_subset(m, n, [&](const std::vector<int>& idx) {
        QMat a(n);
        QVec b(n);
        for (int i = 0; i < n; ++i) {
            a[i] = to_rational(h.rows[idx[i]].normal);
            b[i] = Rat(h.rows[idx[i]].rhs);
        }
        auto x = solve_square(std::move(a), std::move(b));
        if (x && h.feasible(*x)) cands.push_back(std::move(*x));
    });
    std::sort(cands.begin(), cands.end(), [](const QVec& a, const QVec& b) { return lex_cmp(a, b) < 0; });
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    out.vertices = std::move(cands);
    if (out.vertices.empty()) return out;  // empty set, trivially bounded

    auto all_nonpositive = [&](const QVec& u) {
        for (const HRow& r : h.rows)
            if (dot(r.normal, u) > 0) return false;
        return true;
    };
    for_each_subset(m, n - 1, [&](const std::vector<int>& idx) {
        if (!out.bounded) return;
        QMat a;
        for (int i : idx) a.push_back(to_rational(h.rows[i].normal));
        QMat kb = kernel_basis(a, n);
        if (kb.size() != 1) return;  // not an extreme-ray candidate
        QVec u = kb[0];
        QVec nu(u.size());
        for (std::size_t j = 0; j < u.size(); ++j) nu[j] = -u[j];
        if (all_nonpositive(u) || all_nonpositive(nu)) out.bounded = false;
    });
    return out;
}

}  // namespace

VRep enumerate_vertices(const HRep& h) {
    if (h.n < 1) throw GeometryError("ambient dimension must be >= 1");
    for (const HRow& r : h.rows)
        if (static_cast<int>(r.normal.size()) != h.n)
            throw GeometryError("row width does not match ambient dimension");

    QMat a;
    for (const HRow& r : h.rows) a.push_back(to_rational(r.normal));
    const int r = a.empty() ? 0 : rank(a);

    if (r < h.n) {
        // Nontrivial lineality space: feasible means unbounded. Feasibility is
        // decided on the pointed projection onto row-space coordinates.
        if (r == 0) {
            if (h.rows.empty() || [&] {
                    QVec zero(h.n, Rat(0));
                    return h.feasible(zero);
                }())
                throw GeometryError("unbounded: constraint normals span rank 0");
            return VRep{h.n, {}, std::nullopt};
        }
        QMat basis = rref(a);
        HRep proj;
        proj.n = r;
        for (const HRow& row : h.rows) {
            QVec c(r);
            for (int j = 0; j < r; ++j) c[j] = dot(row.normal, basis[j]);
            proj.rows.push_back(canonical_row(c, Rat(row.rhs)));
        }
        EnumCore core = enumerate_full_rank(proj);
        if (!core.vertices.empty())
            throw GeometryError("unbounded: feasible set has a lineality space");
        return VRep{h.n, {}, std::nullopt};
    }

    EnumCore core = enumerate_full_rank(h);
    if (core.vertices.empty()) return VRep{h.n, {}, std::nullopt};
    if (!core.bounded) throw GeometryError("unbounded: recession cone contains a ray");
    VRep v;
    v.n = h.n;
    v.vertices = std::move(core.vertices);
    v.box_k = lattice_box_k(v.vertices);
    return v;
}

// ---------------------------------------------------------------------------
// Facet enumeration (convex hull)
// ---------------------------------------------------------------------------

namespace {

struct HullFrame {
    QVec base;                   // first point, origin of hull coordinates
    std::vector<int> pivot_cols; // hull coordinates = these ambient coordinates
    int dim = 0;
    QMat dir_basis;              // RREF basis of the direction space
};

HullFrame hull_frame(const std::vector<QVec>& pts) {
    HullFrame f;
    f.base = pts[0];
    QMat diffs = difference_matrix(pts);
    f.dir_basis = diffs.empty() ? QMat{} : rref(std::move(diffs), &f.pivot_cols);
    f.dim = static_cast<int>(f.dir_basis.size());
    return f;
}

// Hull coordinates of x: offsets along the RREF pivot columns.
QVec hull_coords(const HullFrame& f, const QVec& x) {
    QVec y(f.dim);
    for (int j = 0; j < f.dim; ++j) y[j] = x[f.pivot_cols[j]] - f.base[f.pivot_cols[j]];
    return y;
}

// Ambient row for the hull-space inequality g.y <= c.
HRow ambient_row(const HullFrame& f, const QVec& g, const Rat& c) {
    const int n = static_cast<int>(f.base.size());
    QVec w(n, Rat(0));
    Rat rhs = c;
    for (int j = 0; j < f.dim; ++j) {
        w[f.pivot_cols[j]] = g[j];
        rhs += g[j] * f.base[f.pivot_cols[j]];
    }
    return canonical_row(w, rhs);
}

}  // namespace

Polytope Polytope::from_points(std::vector<QVec> points) {
    if (points.empty()) throw GeometryError("degenerate input: no points");
    const int n = static_cast<int>(points[0].size());
    for (const QVec& p : points)
        if (static_cast<int>(p.size()) != n) throw GeometryError("points of mixed dimension");
    std::sort(points.begin(), points.end(),
              [](const QVec& a, const QVec& b) { return lex_cmp(a, b) < 0; });
    points.erase(std::unique(points.begin(), points.end()), points.end());

    HullFrame frame = hull_frame(points);
    const int d = frame.dim;

    std::vector<HRow> rows;
    // Affine hull, as pairs of opposite rows from the canonical kernel basis.
    if (d < n) {
        QMat kb = kernel_basis(frame.dir_basis, n);
        kb = rref(std::move(kb));
        for (const QVec& w : kb) {
            Rat rhs = dot(w, frame.base);
            QVec neg(w.size());
            for (std::size_t j = 0; j < w.size(); ++j) neg[j] = -w[j];
            rows.push_back(canonical_row(w, rhs));
            rows.push_back(canonical_row(neg, -rhs));
        }
    }

    // Facets: hyperplanes of the affine hull spanned by d-subsets of points
    // with all points weakly on one side.
    std::vector<QVec> ys;
    ys.reserve(points.size());
    for (const QVec& p : points) ys.push_back(hull_coords(frame, p));

    const int m = static_cast<int>(points.size());
    std::vector<HRow> facet_rows;
    for_each_subset(m, d, [&](const std::vector<int>& idx) {
        if (d == 0) return;
        QMat span;
        for (int i = 1; i < d; ++i) {
            QVec diff(d);
            for (int j = 0; j < d; ++j) diff[j] = ys[idx[i]][j] - ys[idx[0]][j];
            span.push_back(std::move(diff));
        }
        QMat kb = kernel_basis(span, d);
        if (kb.size() != 1) return;  // subset does not span a hyperplane
        QVec g = kb[0];
        Rat c = dot(g, ys[idx[0]]);
        int side = 0;
        for (const QVec& y : ys) {
            int s = cmp(dot(g, y), c);
            if (s == 0) continue;
            if (side == 0) side = s;
            else if (side != s) return;  // points on both sides
        }
        if (side == 0) return;  // all points on the hyperplane: not full rank
        if (side > 0) {
            for (Rat& x : g) x = -x;
            c = -c;
        }
        facet_rows.push_back(ambient_row(frame, g, c));
    });
    std::sort(facet_rows.begin(), facet_rows.end(),
              [](const HRow& a, const HRow& b) { return cmp(a, b) < 0; });
    facet_rows.erase(std::unique(facet_rows.begin(), facet_rows.end(),
                                 [](const HRow& a, const HRow& b) { return cmp(a, b) == 0; }),
                     facet_rows.end());
    rows.insert(rows.end(), facet_rows.begin(), facet_rows.end());
    std::sort(rows.begin(), rows.end(), [](const HRow& a, const HRow& b) { return cmp(a, b) < 0; });

    HRep h;
    h.n = n;
    h.rows = std::move(rows);

    // Keep only the extreme points: tight rows of full rank n.
    std::vector<QVec> extremes;
    for (const QVec& p : points) {
        QMat tight;
        for (std::size_t r = 0; r < h.rows.size(); ++r)
            if (h.slack(static_cast<int>(r), p) == 0) tight.push_back(to_rational(h.rows[r].normal));
        if (!tight.empty() && rank(std::move(tight)) == n) extremes.push_back(p);
    }

    Polytope p;
    p.hrep_ = std::move(h);
    p.vrep_.n = n;
    p.vrep_.vertices = std::move(extremes);
    p.finalize_and_validate();
    return p;
}

Polytope facet_enumeration(const std::vector<QVec>& points) {
    if (affine_rank(points) < 1)
        throw GeometryError("degenerate input: affine dimension < 1");
    return Polytope::from_points(points);
}

// ---------------------------------------------------------------------------
// Polytope construction and validation
// ---------------------------------------------------------------------------

Polytope Polytope::from_hrep(HRep h) {
    // Basic canonicalization before enumerating: content-1 rows, sorted, unique.
    for (HRow& r : h.rows) r = canonical_row(to_rational(r.normal), Rat(r.rhs));
    std::sort(h.rows.begin(), h.rows.end(), [](const HRow& a, const HRow& b) { return cmp(a, b) < 0; });
    h.rows.erase(std::unique(h.rows.begin(), h.rows.end(),
                             [](const HRow& a, const HRow& b) { return cmp(a, b) == 0; }),
                 h.rows.end());
    for (const HRow& r : h.rows)
        if (content(r.normal) == 0) throw GeometryError("row with zero normal");

    VRep v = enumerate_vertices(h);
    if (v.vertices.empty()) throw GeometryError("empty polytope");

    const int d = affine_rank(v.vertices);
    if (d < h.n) return from_points(v.vertices);  // rebuild hull rows canonically

    // Full-dimensional: facet rows are exactly the rows whose tight vertex
    // set has affine rank n-1; drop redundant rows.
    std::vector<HRow> kept;
    for (std::size_t r = 0; r < h.rows.size(); ++r) {
        std::vector<QVec> tight_pts;
        for (const QVec& x : v.vertices)
            if (h.slack(static_cast<int>(r), x) == 0) tight_pts.push_back(x);
        if (!tight_pts.empty() && affine_rank(tight_pts) == h.n - 1) kept.push_back(h.rows[r]);
    }
    Polytope p;
    p.hrep_.n = h.n;
    p.hrep_.rows = std::move(kept);
    p.vrep_ = std::move(v);
    p.finalize_and_validate();
    return p;
}

Polytope Polytope::from_reps(HRep h, std::vector<QVec> vertices) {
    Polytope p;
    for (HRow& r : h.rows) r = canonical_row(to_rational(r.normal), Rat(r.rhs));
    std::sort(h.rows.begin(), h.rows.end(), [](const HRow& a, const HRow& b) { return cmp(a, b) < 0; });
    std::sort(vertices.begin(), vertices.end(),
              [](const QVec& a, const QVec& b) { return lex_cmp(a, b) < 0; });
    p.hrep_ = std::move(h);
    p.vrep_.n = p.hrep_.n;
    p.vrep_.vertices = std::move(vertices);
    p.finalize_and_validate();
    return p;
}

void Polytope::finalize_and_validate() {
    const int n = hrep_.n;
    const int m = static_cast<int>(hrep_.rows.size());
    if (n < 1) throw GeometryError("ambient dimension must be >= 1");
    if (vrep_.vertices.empty()) throw GeometryError("polytope without vertices");
    for (const QVec& v : vrep_.vertices)
        if (static_cast<int>(v.size()) != n) throw InternalError("vertex width mismatch");

    std::sort(vrep_.vertices.begin(), vrep_.vertices.end(),
              [](const QVec& a, const QVec& b) { return lex_cmp(a, b) < 0; });
    for (std::size_t i = 1; i < vrep_.vertices.size(); ++i)
        if (lex_cmp(vrep_.vertices[i - 1], vrep_.vertices[i]) == 0)
            throw InternalError("duplicate vertices");
    for (int r = 1; r < m; ++r)
        if (cmp(hrep_.rows[r - 1], hrep_.rows[r]) >= 0) throw InternalError("rows not canonical");
    for (const HRow& r : hrep_.rows) {
        IVec all = r.normal;
        all.push_back(r.rhs);
        if (content(r.normal) == 0) throw InternalError("zero facet normal");
        if (content(all) != 1) throw InternalError("row not content-reduced");
    }

    vrep_.box_k = lattice_box_k(vrep_.vertices);

    QMat diffs = difference_matrix(vrep_.vertices);
    std::vector<int> piv;
    dir_basis_ = diffs.empty() ? QMat{} : rref(std::move(diffs), &piv);
    dim_ = static_cast<int>(dir_basis_.size());

    const int nv = num_vertices();
    tight_.assign(nv, boost::dynamic_bitset<>(m));
    for (int v = 0; v < nv; ++v)
        for (int r = 0; r < m; ++r) {
            Rat s = hrep_.slack(r, vrep_.vertices[v]);
            if (s < 0) throw GeometryError("cross-validation failed: vertex violates a row");
            if (s == 0) tight_[v].set(r);
        }

    // Every vertex must be pinned by rows of full rank.
    for (int v = 0; v < nv; ++v) {
        QMat t;
        for (int r = 0; r < m; ++r)
            if (tight_[v].test(r)) t.push_back(to_rational(hrep_.rows[r].normal));
        if (t.empty() || rank(std::move(t)) != n)
            throw GeometryError("cross-validation failed: vertex tight rows have rank < n");
    }

    // Rows are either affine-hull equalities (tight everywhere) or facets
    // (tight on an affine-rank dim-1 subset); anything else is redundant.
    for (int r = 0; r < m; ++r) {
        std::vector<QVec> tight_pts;
        for (int v = 0; v < nv; ++v)
            if (tight_[v].test(r)) tight_pts.push_back(vrep_.vertices[v]);
        if (tight_pts.empty())
            throw GeometryError("cross-validation failed: row tight at no vertex");
        if (static_cast<int>(tight_pts.size()) == nv) continue;
        if (affine_rank(tight_pts) != dim_ - 1)
            throw GeometryError("cross-validation failed: non-facet row in description");
    }
}

std::vector<int> Polytope::face_vertex_indices(const FaceSpec& f) const {
    std::vector<int> out;
    for (int v = 0; v < num_vertices(); ++v) {
        bool all = true;
        for (int r : f.equality_rows)
            if (!tight_[v].test(r)) {
                all = false;
                break;
            }
        if (all) out.push_back(v);
    }
    return out;
}

FaceSpec Polytope::face_spec_of(const std::vector<int>& vertex_ids) const {
    if (vertex_ids.empty()) throw PreconditionError("face_spec_of: empty vertex set");
    boost::dynamic_bitset<> common = tight_[vertex_ids[0]];
    for (std::size_t i = 1; i < vertex_ids.size(); ++i) common &= tight_[vertex_ids[i]];
    FaceSpec f;
    for (std::size_t r = 0; r < common.size(); ++r)
        if (common.test(r)) f.equality_rows.push_back(static_cast<int>(r));
    return f;
}

int Polytope::vertex_index(const QVec& x) const {
    auto it = std::lower_bound(vrep_.vertices.begin(), vrep_.vertices.end(), x,
                               [](const QVec& a, const QVec& b) { return lex_cmp(a, b) < 0; });
    if (it != vrep_.vertices.end() && lex_cmp(*it, x) == 0)
        return static_cast<int>(it - vrep_.vertices.begin());
    return -1;
}

Polytope face_of(const Polytope& p, const FaceSpec& f) {
    for (int r : f.equality_rows)
        if (r < 0 || r >= static_cast<int>(p.hrep().rows.size()))
            throw PreconditionError("face_of: row index out of range");
    std::vector<int> ids = p.face_vertex_indices(f);
    if (ids.empty()) throw GeometryError("face_of: empty face");
    std::vector<QVec> pts;
    pts.reserve(ids.size());
    for (int i : ids) pts.push_back(p.vertex(i));
    return Polytope::from_points(std::move(pts));
}

}  // namespace latpath
