#include "latpath/metrics.hpp"

#include <algorithm>

namespace latpath {

namespace {

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

}  // namespace

LevelProfile level_profile(const Polytope& p) {
    LevelProfile lp;
    for (const HRow& row : p.hrep().rows) {
        std::vector<Rat> vals;
        vals.reserve(p.num_vertices());
        for (const QVec& v : p.vertices()) vals.push_back(dot(row.normal, v));
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        lp.per_row.push_back(static_cast<int>(vals.size()));
    }
    lp.overall = lp.per_row.empty() ? 0 : *std::max_element(lp.per_row.begin(), lp.per_row.end());
    return lp;
}

MatrixMetrics matrix_metrics(const HRep& h, bool with_subdet) {
    MatrixMetrics mm;
    for (const HRow& r : h.rows) {
        int supp = 0;
        for (const Int& x : r.normal) {
            Int a = boost::multiprecision::abs(x);
            if (a > mm.a_inf) mm.a_inf = a;
            if (x != 0) ++supp;
        }
        mm.max_support = std::max(mm.max_support, supp);
    }

    const int m = static_cast<int>(h.rows.size());
    const int n = h.n;
    if (!with_subdet || n > 5 || m > 24) return mm;  // subdeterminant census skipped

    Int best = 0;
    for (int j = 1; j <= std::min(m, n); ++j) {
        for_each_subset(m, j, [&](const std::vector<int>& ri) {
            for_each_subset(n, j, [&](const std::vector<int>& ci) {
                QMat sub(j, QVec(j));
                for (int a = 0; a < j; ++a)
                    for (int b = 0; b < j; ++b) sub[a][b] = Rat(h.rows[ri[a]].normal[ci[b]]);
                Rat d = det(std::move(sub));
                Int ad = boost::multiprecision::abs(num(d));
                if (ad > best) best = ad;
            });
        });
    }
    mm.max_subdet = best;
    return mm;
}

}  // namespace latpath
