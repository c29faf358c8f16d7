#include "latpath/objective.hpp"

#include <algorithm>
#include <numeric>

namespace latpath {

QVec Objective::value_tuple(const QVec& x) const {
    QVec t;
    t.reserve(1 + perturbations.size());
    t.push_back(dot(primary, x));
    for (const QVec& p : perturbations) t.push_back(dot(p, x));
    return t;
}

int objective_compare(const Objective& o, const QVec& u, const QVec& v) {
    int c = cmp(dot(o.primary, u), dot(o.primary, v));
    if (c != 0) return c;
    for (const QVec& p : o.perturbations) {
        c = cmp(dot(p, u), dot(p, v));
        if (c != 0) return c;
    }
    return 0;
}

bool is_total_on(const Objective& o, const std::vector<QVec>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (objective_compare(o, points[i], points[j]) == 0) return false;
    return true;
}

QVec default_tiebreak(const std::vector<QVec>& points) {
    if (points.empty()) throw PreconditionError("default_tiebreak: no points");
    const int n = static_cast<int>(points[0].size());
    Int l = 1;
    for (const QVec& p : points)
        for (const Rat& x : p) l = boost::multiprecision::lcm(l, den(x));
    Int big = 0;
    for (const QVec& p : points)
        for (const Rat& x : p) {
            Int scaled = boost::multiprecision::abs(num(x)) * (l / den(x));
            if (scaled > big) big = scaled;
        }
    // After scaling by l the points are lattice points of [-big, big]^n, so
    // the alpha-power weights with alpha = 2*big+1 separate all of them.
    Int alpha = 2 * big + 1;
    QVec w(n);
    Rat pw = 1;
    for (int i = 0; i < n; ++i) {
        pw *= Rat(alpha);
        w[i] = pw;
    }
    return w;
}

Objective with_tiebreak(Objective c, const std::vector<QVec>& points) {
    c.perturbations.push_back(default_tiebreak(points));
    return c;
}

bool SignedPermutation::valid() const {
    std::vector<char> seen(sigma.size(), 0);
    for (int s : sigma) {
        int a = s < 0 ? -s : s;
        if (s == 0 || a > n() || seen[a - 1]) return false;
        seen[a - 1] = 1;
    }
    return true;
}

int SignedPermutation::preimage(int i) const {
    for (int pos = 1; pos <= n(); ++pos) {
        if (sigma[pos - 1] == i) return pos;
        if (sigma[pos - 1] == -i) return -pos;
    }
    throw InternalError("preimage: invalid signed permutation");
}

SignedPermutation SignedPermutation::identity(int n) {
    SignedPermutation s;
    s.sigma.resize(n);
    std::iota(s.sigma.begin(), s.sigma.end(), 1);
    return s;
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 1);
    std::vector<SignedPermutation> out;
    do {
        for (int mask = 0; mask < (1 << n); ++mask) {
            SignedPermutation s;
            s.sigma = base;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) s.sigma[i] = -s.sigma[i];
            out.push_back(std::move(s));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    std::sort(out.begin(), out.end(),
              [](const SignedPermutation& a, const SignedPermutation& b) { return a.sigma < b.sigma; });
    return out;
}

SignedPermutation random_signed_permutation(int n, Xorshift64Star& rng) {
    SignedPermutation s = SignedPermutation::identity(n);
    for (int i = n - 1; i > 0; --i)
        std::swap(s.sigma[i], s.sigma[rng.below(static_cast<std::uint64_t>(i + 1))]);
    for (int i = 0; i < n; ++i)
        if (rng.below(2)) s.sigma[i] = -s.sigma[i];
    return s;
}

QVec build_x_sigma(const SignedPermutation& sigma, const Int& k, const Int& alpha) {
    if (!sigma.valid()) throw PreconditionError("build_x_sigma: invalid signed permutation");
    if (alpha < 2 * k + 1)
        throw PreconditionError("build_x_sigma: alpha must be at least 2k+1");
    QVec w(sigma.n());
    for (int i = 1; i <= sigma.n(); ++i) {
        int s = sigma.image(i);
        int a = s < 0 ? -s : s;
        Int p = 1;
        for (int t = 0; t < a; ++t) p *= alpha;
        w[i - 1] = Rat(s < 0 ? Int(-p) : p);
    }
    return w;
}

int lex_compare(const SignedPermutation& sigma, const IVec& x, const IVec& y) {
    const int n = sigma.n();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw PreconditionError("lex_compare: dimension mismatch");
    for (int j = n; j >= 1; --j) {
        int pre = sigma.preimage(j);
        int coord = pre < 0 ? -pre : pre;
        Int xv = pre < 0 ? Int(-x[coord - 1]) : x[coord - 1];
        Int yv = pre < 0 ? Int(-y[coord - 1]) : y[coord - 1];
        int c = cmp(xv, yv);
        if (c != 0) return c;
    }
    return 0;
}

}  // namespace latpath
