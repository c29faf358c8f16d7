#include "latpath/generators.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace latpath {

namespace {

const std::map<std::string, Family>& family_table() {
    static const std::map<std::string, Family> t = {
        {"cube", Family::cube},
        {"simplex", Family::simplex},
        {"cross_polytope", Family::cross_polytope},
        {"dilated_01_hull", Family::dilated_01_hull},
        {"lattice_hull", Family::lattice_hull},
        {"half_integral_hull", Family::half_integral_hull},
        {"order_polytope", Family::order_polytope},
    };
    return t;
}

bool is_hull_family(Family f) {
    return f == Family::dilated_01_hull || f == Family::lattice_hull ||
           f == Family::half_integral_hull;
}

bool uses_k(Family f) {
    return f == Family::cube || f == Family::simplex || f == Family::dilated_01_hull ||
           f == Family::lattice_hull;
}

}  // namespace

std::string family_name(Family f) {
    for (const auto& [name, fam] : family_table())
        if (fam == f) return name;
    throw InternalError("unknown family");
}

Family family_from_name(const std::string& name) {
    auto it = family_table().find(name);
    if (it == family_table().end()) throw ParseError("unknown family \"" + name + "\"");
    return it->second;
}

std::string GenSpec::to_line() const {
    std::ostringstream s;
    s << "family=" << family_name(family) << ",n=" << n;
    if (uses_k(family)) s << ",k=" << k;
    if (is_hull_family(family)) s << ",points=" << points;
    if (family == Family::cross_polytope) s << ",shifted=" << (shifted ? 1 : 0);
    s << ",seed=" << seed;
    return s.str();
}

GenSpec GenSpec::parse_line(const std::string& line) {
    std::map<std::string, std::string> kv;
    std::istringstream s(line);
    std::string item;
    while (std::getline(s, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("GenSpec: expected key=value, got \"" + item + "\"");
        std::string key = item.substr(0, eq);
        if (kv.count(key)) throw ParseError("GenSpec: duplicate key \"" + key + "\"");
        kv[key] = item.substr(eq + 1);
    }
    auto take = [&](const char* key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw ParseError(std::string("GenSpec: missing key \"") + key + "\"");
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    GenSpec g;
    g.family = family_from_name(take("family"));
    g.n = static_cast<int>(parse_int(take("n")).convert_to<long long>());
    if (uses_k(g.family)) g.k = parse_int(take("k")).convert_to<long long>();
    if (is_hull_family(g.family))
        g.points = static_cast<int>(parse_int(take("points")).convert_to<long long>());
    if (g.family == Family::cross_polytope) g.shifted = parse_int(take("shifted")) != 0;
    g.seed = parse_int(take("seed")).convert_to<std::uint64_t>();
    if (!kv.empty()) throw ParseError("GenSpec: unknown key \"" + kv.begin()->first + "\"");
    return g;
}

std::string GenSpec::name() const {
    std::ostringstream s;
    s << family_name(family) << "_n" << n;
    if (uses_k(family)) s << "_k" << k;
    if (is_hull_family(family)) s << "_p" << points;
    if (family == Family::cross_polytope) s << (shifted ? "_shifted" : "_origin");
    s << "_s" << seed;
    return s.str();
}

namespace {

void check_desk_scale(const GenSpec& g) {
    if (g.n < 1 || g.n > 6) throw PreconditionError("GenSpec: n must be in 1..6");
    if (uses_k(g.family) && (g.k < 1 || g.k > 4))
        throw PreconditionError("GenSpec: k must be in 1..4");
    if (is_hull_family(g.family) && (g.points < 2 || g.points > 40))
        throw PreconditionError("GenSpec: points must be in 2..40");
}

Polytope make_cube(int n, long long k) {
    HRep h;
    h.n = n;
    for (int i = 0; i < n; ++i) {
        IVec up(n, Int(0)), down(n, Int(0));
        up[i] = 1;
        down[i] = -1;
        h.rows.push_back(HRow{up, Int(k)});
        h.rows.push_back(HRow{down, Int(0)});
    }
    std::vector<QVec> verts;
    for (long long mask = 0; mask < (1LL << n); ++mask) {
        QVec v(n);
        for (int i = 0; i < n; ++i) v[i] = Rat((mask >> i) & 1 ? k : 0);
        verts.push_back(std::move(v));
    }
    return Polytope::from_reps(std::move(h), std::move(verts));
}

Polytope make_simplex(int n, long long k) {
    HRep h;
    h.n = n;
    for (int i = 0; i < n; ++i) {
        IVec down(n, Int(0));
        down[i] = -1;
        h.rows.push_back(HRow{down, Int(0)});
    }
    h.rows.push_back(HRow{IVec(n, Int(1)), Int(k)});
    std::vector<QVec> verts{QVec(n, Rat(0))};
    for (int i = 0; i < n; ++i) {
        QVec v(n, Rat(0));
        v[i] = Rat(k);
        verts.push_back(std::move(v));
    }
    return Polytope::from_reps(std::move(h), std::move(verts));
}

Polytope make_cross(int n, bool shifted) {
    if (n > 6) throw PreconditionError("cross_polytope: n too large");
    HRep h;
    h.n = n;
    for (long long mask = 0; mask < (1LL << n); ++mask) {
        IVec s(n);
        Int rhs = 1;
        for (int i = 0; i < n; ++i) {
            s[i] = (mask >> i) & 1 ? Int(-1) : Int(1);
            if (shifted) rhs += s[i];
        }
        h.rows.push_back(HRow{std::move(s), rhs});
    }
    std::vector<QVec> verts;
    for (int i = 0; i < n; ++i)
        for (int sign : {1, -1}) {
            QVec v(n, Rat(shifted ? 1 : 0));
            v[i] += Rat(sign);
            verts.push_back(std::move(v));
        }
    return Polytope::from_reps(std::move(h), std::move(verts));
}

Polytope make_hull(const GenSpec& g) {
    for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
        Xorshift64Star rng(g.seed + attempt);  // incremented sub-seed on redraw
        std::vector<QVec> pts;
        for (int i = 0; i < g.points; ++i) {
            QVec p(g.n);
            for (int j = 0; j < g.n; ++j) {
                switch (g.family) {
                    case Family::dilated_01_hull:
                        p[j] = Rat(Int(g.k) * Int(rng.below(2)));
                        break;
                    case Family::lattice_hull:
                        p[j] = Rat(Int(rng.below(static_cast<std::uint64_t>(g.k) + 1)));
                        break;
                    case Family::half_integral_hull:
                        p[j] = Rat(Int(rng.below(3)), Int(2));
                        break;
                    default:
                        throw InternalError("not a hull family");
                }
            }
            pts.push_back(std::move(p));
        }
        std::sort(pts.begin(), pts.end(),
                  [](const QVec& a, const QVec& b) { return lex_cmp(a, b) < 0; });
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (pts.size() < 2) continue;  // degenerate draw: dim < 1
        bool all_equal_rank0 = true;
        for (std::size_t i = 1; i < pts.size() && all_equal_rank0; ++i)
            if (lex_cmp(pts[i], pts[0]) != 0) all_equal_rank0 = false;
        if (all_equal_rank0) continue;
        return facet_enumeration(pts);
    }
    throw GeometryError("hull generation: degenerate draws exhausted the retry budget");
}

void check_family_lattice(const GenSpec& g, const Polytope& p) {
    auto in = [&](auto pred) {
        for (const QVec& v : p.vertices())
            for (const Rat& x : v)
                if (!pred(x)) return false;
        return true;
    };
    bool ok = true;
    switch (g.family) {
        case Family::dilated_01_hull:
            ok = in([&](const Rat& x) { return x == 0 || x == Rat(Int(g.k)); });
            break;
        case Family::half_integral_hull:
            ok = in([](const Rat& x) { return x == 0 || x == Rat(1, 2) || x == 1; });
            break;
        case Family::lattice_hull:
            ok = in([&](const Rat& x) { return is_integer(x) && x >= 0 && x <= Rat(Int(g.k)); });
            break;
        case Family::order_polytope:
            ok = in([](const Rat& x) { return x == 0 || x == 1; });
            break;
        default:
            break;
    }
    if (!ok) throw InternalError("generated vertices left the family lattice");
}

}  // namespace

std::vector<std::pair<int, int>> poset_random(int n, std::uint64_t seed) {
    Xorshift64Star rng(seed);
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.below(2)) rel[i][j] = 1;
    // transitive closure; relations only point up in index order, so this is
    // already a DAG
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (rel[i][m] && rel[m][j]) rel[i][j] = 1;
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rel[i][j]) out.emplace_back(i, j);
    return out;
}

Polytope order_polytope(int n, const std::vector<std::pair<int, int>>& relations) {
    HRep h;
    h.n = n;
    for (int i = 0; i < n; ++i) {
        IVec up(n, Int(0)), down(n, Int(0));
        up[i] = 1;
        down[i] = -1;
        h.rows.push_back(HRow{up, Int(1)});
        h.rows.push_back(HRow{down, Int(0)});
    }
    for (auto [i, j] : relations) {
        IVec r(n, Int(0));  // x_i <= x_j
        r[i] = 1;
        r[j] = -1;
        h.rows.push_back(HRow{std::move(r), Int(0)});
    }
    return Polytope::from_hrep(std::move(h));
}

Polytope generate(const GenSpec& spec) {
    check_desk_scale(spec);
    Polytope p = [&] {
        switch (spec.family) {
            case Family::cube:
                return make_cube(spec.n, spec.k);
            case Family::simplex:
                return make_simplex(spec.n, spec.k);
            case Family::cross_polytope:
                return make_cross(spec.n, spec.shifted);
            case Family::order_polytope:
                return order_polytope(spec.n, poset_random(spec.n, spec.seed));
            default:
                return make_hull(spec);
        }
    }();
    check_family_lattice(spec, p);
    return p;
}

std::vector<GenSpec> parse_manifest(const std::string& text) {
    std::vector<GenSpec> specs;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find('\r') != std::string::npos)
            throw ParseError("manifest: CR in input; use LF line endings");
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        specs.push_back(GenSpec::parse_line(line.substr(first)));
    }
    return specs;
}

}  // namespace latpath
