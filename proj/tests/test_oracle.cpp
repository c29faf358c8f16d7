#include <doctest.h>

#include "latpath/oracle.hpp"
#include "test_util.hpp"

using namespace latpath;
using lptest::qv;
using lptest::vid;

TEST_CASE("brute_force_optimum") {
    Polytope sq = lptest::unit_cube(2);
    Objective c = lptest::perturbed(qv({1, 1}), sq);
    CHECK(sq.vertex(brute_force_optimum(sq.vertices(), c).index) == qv({1, 1}));

    Polytope p5 = lptest::pentagon();
    Objective tie{qv({1, 1}), {}};
    Optimum t = brute_force_optimum(p5.vertices(), tie);
    CHECK(!t.unique);  // (2,1) and (1,2) tie at 3
    Objective broken{qv({1, 1}), {qv({0, 1})}};
    Optimum b = brute_force_optimum(p5.vertices(), broken);
    CHECK(b.unique);
    CHECK(p5.vertex(b.index) == qv({1, 2}));

    Polytope cr = lptest::cross3();
    Objective cc = lptest::perturbed(qv({1, 2, 3}), cr);
    CHECK(cr.vertex(brute_force_optimum(cr.vertices(), cc).index) == qv({0, 0, 1}));
}

TEST_CASE("orientation digraph: unique sink and source, ties rejected") {
    Polytope p5 = lptest::pentagon();
    EdgeGraph g = build_edge_graph(p5);
    Objective c = lptest::perturbed(qv({1, 0}), p5);
    OrientationDigraph d = orient(g, p5.vertices(), c);
    CHECK(d.sink == brute_force_optimum(p5.vertices(), c).index);
    CHECK(d.source >= 0);
    CHECK(d.source != d.sink);

    Objective tying{qv({1, 0}), {}};  // ties on the x = 0 and x = 2 edges
    CHECK_THROWS_AS(orient(g, p5.vertices(), tying), PreconditionError);
}

TEST_CASE("orientation digraph is well-formed under many seeded objectives") {
    Polytope cr = lptest::cross3();
    EdgeGraph g = build_edge_graph(cr);
    Xorshift64Star rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        QVec c(3);
        for (int j = 0; j < 3; ++j) c[j] = Rat(Int(rng.range(-9, 9)));
        Objective o = lptest::perturbed(std::move(c), cr);
        OrientationDigraph d = orient(g, cr.vertices(), o);  // asserts internally
        CHECK(d.sink == brute_force_optimum(cr.vertices(), o).index);
    }
}

TEST_CASE("shortest_monotone_distance") {
    Polytope p5 = lptest::pentagon();
    EdgeGraph g = build_edge_graph(p5);
    Objective c{qv({1, 0}), {qv({0, 1})}};  // x first, y breaks ties

    int sink = brute_force_optimum(p5.vertices(), c).index;
    CHECK(shortest_monotone_distance(g, p5.vertices(), c, sink) == 0);
    CHECK(shortest_monotone_distance(g, p5.vertices(), c, vid(p5, {0, 0})) == 2);

    Polytope cube = lptest::unit_cube(3);
    EdgeGraph gc = build_edge_graph(cube);
    Objective c3 = lptest::perturbed(qv({1, 1, 1}), cube);
    CHECK(shortest_monotone_distance(gc, cube.vertices(), c3, vid(cube, {0, 0, 0})) == 3);
}

TEST_CASE("exact-tiny monotone diameter") {
    Polytope p5 = lptest::pentagon();
    EdgeGraph g = build_edge_graph(p5);
    DiameterEstimate est = monotone_diameter_exact_tiny(p5, g);
    CHECK(est.value == 2);
    CHECK(est.orientations == 6);  // the pentagon has 3 distinct edge-normal lines
    // every reported pattern has the length of the edge list
    for (const std::string& pat : est.orientation_patterns) CHECK(pat.size() == 5);
    // the witness realizes the worst case
    CHECK(shortest_monotone_distance(g, p5.vertices(), est.witness_objective,
                                     est.witness_vertex) == 2);

    Polytope tri = facet_enumeration({qv({0, 0}), qv({1, 0}), qv({0, 1})});
    EdgeGraph gt = build_edge_graph(tri);
    CHECK(monotone_diameter_exact_tiny(tri, gt).value == 1);

    Polytope big = lptest::unit_cube(4);
    EdgeGraph gb = build_edge_graph(big);
    CHECK_THROWS_AS(monotone_diameter_exact_tiny(big, gb), PreconditionError);
}

TEST_CASE("sampled monotone diameter: cube reaches its dimension") {
    Polytope cube = lptest::unit_cube(3);
    EdgeGraph g = build_edge_graph(cube);
    DiameterEstimate est = monotone_diameter_sampled(cube, g, 50, 4242);
    CHECK(est.value == 3);
}

TEST_CASE("sampled monotone diameter is nondecreasing in the count") {
    Polytope p5 = lptest::pentagon();
    EdgeGraph g = build_edge_graph(p5);
    int last = 0;
    for (int count : {5, 10, 20, 40}) {
        int v = monotone_diameter_sampled(p5, g, count, 31337).value;
        CHECK(v >= last);
        last = v;
    }
    // a monotone distance can never beat the undirected graph diameter
    // (the 5-cycle's diameter is 2)
    CHECK(last <= 2);
}

TEST_CASE("verify_lex_order corner cases") {
    CHECK(verify_lex_order(1, 3, 7).pass);
    CHECK(verify_lex_order(2, 1, 3).pass);
    CHECK_THROWS_AS(verify_lex_order(4, 1, 3), PreconditionError);
}
