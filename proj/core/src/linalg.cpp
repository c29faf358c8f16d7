#include "latpath/linalg.hpp"

namespace latpath {

namespace {

// Forward elimination; returns pivot (row, col) pairs. Destroys m.
std::vector<std::pair<int, int>> eliminate(QMat& m) {
    std::vector<std::pair<int, int>> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        for (int i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(QMat m) { return static_cast<int>(eliminate(m).size()); }

QMat rref(QMat m, std::vector<int>* pivot_cols) {
    auto pivots = eliminate(m);
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        auto [r, c] = *it;
        Rat p = m[r][c];
        for (Rat& x : m[r]) x /= p;
        for (int i = 0; i < r; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
        }
    }
    m.resize(pivots.size());
    if (pivot_cols) {
        pivot_cols->clear();
        for (auto [r, c] : pivots) pivot_cols->push_back(c);
    }
    return m;
}

std::optional<QVec> solve_square(QMat a, QVec b) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return QVec{};
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a[i].size()) != n) throw InternalError("solve_square: not square");
        a[i].push_back(b[i]);
    }
    std::vector<int> pivot_cols;
    QMat r = rref(std::move(a), &pivot_cols);
    if (static_cast<int>(r.size()) != n) return std::nullopt;
    for (int i = 0; i < n; ++i)
        if (pivot_cols[i] != i) return std::nullopt;  // singular: pivot fell in the rhs column
    QVec x(n);
    for (int i = 0; i < n; ++i) x[i] = r[i][n];
    return x;
}

Rat det(QMat a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    for (const QVec& row : a)
        if (static_cast<int>(row.size()) != n) throw InternalError("det: not square");
    Rat d = 1;
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) return 0;
        if (pr != c) {
            std::swap(a[pr], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] / a[c][c];
            for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return d;
}

QMat kernel_basis(const QMat& m, int ncols) {
    std::vector<int> pivot_cols;
    QMat r = m.empty() ? QMat{} : rref(m, &pivot_cols);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivot_cols) is_pivot[c] = true;
    QMat basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        QVec v(ncols, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < r.size(); ++i) v[pivot_cols[i]] = -r[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace latpath
