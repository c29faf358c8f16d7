#include <doctest.h>

#include <sstream>

#include "latpath/generators.hpp"
#include "latpath/io.hpp"
#include "latpath/metrics.hpp"
#include "test_util.hpp"

using namespace latpath;
using lptest::qv;

namespace {

std::string serialize(const Polytope& p) {
    std::ostringstream s;
    write_hrep(s, p.hrep());
    write_vrep(s, p.vrep());
    return s.str();
}

}  // namespace

TEST_CASE("GenSpec line round trip and strictness") {
    GenSpec g;
    g.family = Family::lattice_hull;
    g.n = 3;
    g.k = 2;
    g.points = 12;
    g.seed = 99;
    CHECK(g.to_line() == "family=lattice_hull,n=3,k=2,points=12,seed=99");
    GenSpec back = GenSpec::parse_line(g.to_line());
    CHECK(back.to_line() == g.to_line());
    CHECK(back.name() == "lattice_hull_n3_k2_p12_s99");

    CHECK_THROWS_AS(GenSpec::parse_line("family=cube,n=3,k=1"), ParseError);  // missing seed
    CHECK_THROWS_AS(GenSpec::parse_line("family=cube,n=3,k=1,seed=1,bogus=2"), ParseError);
    CHECK_THROWS_AS(GenSpec::parse_line("family=donut,n=3,seed=1"), ParseError);
    // desk-scale limits are enforced at generation time
    CHECK_THROWS_AS(generate(GenSpec::parse_line("family=cube,n=3,k=9,seed=1")),
                    PreconditionError);
    CHECK_THROWS_AS(generate(GenSpec::parse_line("family=cube,n=9,k=1,seed=1")),
                    PreconditionError);
}

TEST_CASE("product families") {
    Polytope cube = generate(GenSpec::parse_line("family=cube,n=3,k=1,seed=0"));
    CHECK(cube.num_vertices() == 8);
    CHECK(cube.hrep().rows.size() == 6);
    CHECK(cube.vrep().box_k == Int(1));

    Polytope simplex = generate(GenSpec::parse_line("family=simplex,n=3,k=2,seed=0"));
    CHECK(simplex.num_vertices() == 4);
    CHECK(simplex.hrep().rows.size() == 4);

    Polytope cross = generate(GenSpec::parse_line("family=cross_polytope,n=3,shifted=1,seed=0"));
    CHECK(cross.num_vertices() == 6);
    CHECK(cross.hrep().rows.size() == 8);
    CHECK(cross.vrep().box_k == Int(2));

    Polytope cross0 = generate(GenSpec::parse_line("family=cross_polytope,n=3,shifted=0,seed=0"));
    CHECK(!cross0.vrep().box_k.has_value());  // negative coordinates
}

TEST_CASE("generation is deterministic bit for bit") {
    const char* lines[] = {
        "family=half_integral_hull,n=3,points=10,seed=7",
        "family=lattice_hull,n=3,k=3,points=14,seed=21",
        "family=dilated_01_hull,n=4,k=2,points=12,seed=5",
        "family=order_polytope,n=4,seed=11",
    };
    for (const char* line : lines) {
        GenSpec g = GenSpec::parse_line(line);
        CHECK(serialize(generate(g)) == serialize(generate(g)));
    }
}

TEST_CASE("hull families stay on their lattices") {
    Polytope half = generate(GenSpec::parse_line("family=half_integral_hull,n=3,points=10,seed=7"));
    for (const QVec& v : half.vertices())
        for (const Rat& x : v) CHECK((x == 0 || x == Rat(1, 2) || x == 1));

    Polytope dil = generate(GenSpec::parse_line("family=dilated_01_hull,n=3,k=3,points=10,seed=3"));
    for (const QVec& v : dil.vertices())
        for (const Rat& x : v) CHECK((x == 0 || x == 3));

    Polytope lat = generate(GenSpec::parse_line("family=lattice_hull,n=4,k=2,points=16,seed=13"));
    CHECK(lat.vrep().box_k.has_value());
    CHECK(*lat.vrep().box_k <= 2);
}

TEST_CASE("poset_random and order polytopes") {
    CHECK(poset_random(1, 5).empty());
    CHECK(poset_random(3, 1) == poset_random(3, 1));

    // transitivity
    auto rel = poset_random(6, 17);
    auto has = [&](int a, int b) {
        return std::find(rel.begin(), rel.end(), std::make_pair(a, b)) != rel.end();
    };
    for (auto [a, b] : rel)
        for (auto [c, d] : rel)
            if (b == c) CHECK(has(a, d));

    // chain of 3: x1 <= x2 <= x3, a 2-level polytope with 4 vertices
    Polytope chain = order_polytope(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(chain.num_vertices() == 4);
    CHECK(level_profile(chain).overall == 2);

    // antichain: the cube
    Polytope anti = order_polytope(3, {});
    CHECK(anti.num_vertices() == 8);
    CHECK(anti.hrep().rows.size() == 6);
}

TEST_CASE("every generated lattice instance satisfies the sparse level bound") {
    // level <= s * k * ||A||_inf + 1 for integral descriptions of (0,k)
    // lattice polytopes
    std::vector<std::string> corpus;
    for (int seed = 1; seed <= 8; ++seed) {
        corpus.push_back("family=lattice_hull,n=3,k=3,points=12,seed=" + std::to_string(seed));
        corpus.push_back("family=dilated_01_hull,n=4,k=2,points=12,seed=" + std::to_string(seed));
        corpus.push_back("family=order_polytope,n=5,seed=" + std::to_string(seed));
    }
    for (const std::string& line : corpus) {
        Polytope p = generate(GenSpec::parse_line(line));
        REQUIRE(p.vrep().box_k.has_value());
        MatrixMetrics mm = matrix_metrics(p.hrep());
        Int bound = Int(mm.max_support) * *p.vrep().box_k * mm.a_inf + 1;
        CHECK(Int(level_profile(p).overall) <= bound);
    }
}

TEST_CASE("degenerate draws are retried with incremented sub-seeds") {
    // n=1, k=1, 2 points: a seed whose first draw collapses to a single point
    // must still produce the segment [0,1] via a retry.
    bool seen_retry = false;
    for (std::uint64_t seed = 0; seed < 64 && !seen_retry; ++seed) {
        Xorshift64Star probe(seed);
        std::uint64_t first = probe.below(2), second = probe.below(2);
        if (first != second) continue;  // non-degenerate first draw
        seen_retry = true;
        GenSpec g;
        g.family = Family::lattice_hull;
        g.n = 1;
        g.k = 1;
        g.points = 2;
        g.seed = seed;
        Polytope p = generate(g);
        CHECK(p.num_vertices() == 2);
    }
    CHECK(seen_retry);
}

TEST_CASE("product families agree with independent vertex enumeration") {
    // the direct constructors supply their vertex lists; re-enumerating from
    // the H-rep must reproduce them exactly
    for (const char* line : {"family=cube,n=2,k=2,seed=0", "family=cube,n=4,k=1,seed=0",
                             "family=simplex,n=3,k=2,seed=0",
                             "family=cross_polytope,n=3,shifted=1,seed=0",
                             "family=cross_polytope,n=3,shifted=0,seed=0"}) {
        Polytope p = generate(GenSpec::parse_line(line));
        VRep enumerated = enumerate_vertices(p.hrep());
        CHECK(enumerated.vertices == p.vrep().vertices);
    }
}
