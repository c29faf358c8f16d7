#include <benchmark/benchmark.h>

#include "latpath/edge_graph.hpp"
#include "latpath/generators.hpp"
#include "latpath/oracle.hpp"
#include "latpath/solvers.hpp"

using namespace latpath;

namespace {

Polytope hull_instance(int n, long long k, int points, std::uint64_t seed) {
    GenSpec g;
    g.family = Family::lattice_hull;
    g.n = n;
    g.k = k;
    g.points = points;
    g.seed = seed;
    return generate(g);
}

Objective seeded_objective(const Polytope& p, std::uint64_t seed) {
    Xorshift64Star rng(seed);
    QVec c(p.n());
    for (int j = 0; j < p.n(); ++j) c[j] = Rat(Int(rng.range(-9, 9)));
    return with_tiebreak(Objective{std::move(c), {}}, p.vertices());
}

void BM_EnumerateVertices(benchmark::State& state) {
    GenSpec g;
    g.family = Family::cube;
    g.n = static_cast<int>(state.range(0));
    g.k = 1;
    HRep h = generate(g).hrep();
    for (auto _ : state) {
        VRep v = enumerate_vertices(h);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_EnumerateVertices)->Arg(3)->Arg(4)->Arg(5);

void BM_FacetEnumeration(benchmark::State& state) {
    Xorshift64Star rng(42);
    std::vector<QVec> pts;
    for (int i = 0; i < state.range(0); ++i) {
        QVec p(3);
        for (int j = 0; j < 3; ++j) p[j] = Rat(Int(rng.below(4)));
        pts.push_back(std::move(p));
    }
    for (auto _ : state) {
        Polytope p = facet_enumeration(pts);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_FacetEnumeration)->Arg(12)->Arg(20)->Arg(30);

void BM_EdgeGraph(benchmark::State& state) {
    Polytope p = hull_instance(4, 3, 20, 7);
    for (auto _ : state) {
        EdgeGraph g = build_edge_graph(p);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_EdgeGraph);

void BM_LatticeShadowSolve(benchmark::State& state) {
    Polytope p = hull_instance(3, 3, 14, 11);
    EdgeGraph g = build_edge_graph(p);
    Objective c = seeded_objective(p, 5);
    for (auto _ : state)
        for (int start = 0; start < p.num_vertices(); ++start) {
            SolveReport rep = lattice_shadow_solve(p, g, c, start);
            benchmark::DoNotOptimize(rep);
        }
}
BENCHMARK(BM_LatticeShadowSolve);

void BM_TwoPhaseSolve(benchmark::State& state) {
    Polytope p = hull_instance(3, 3, 14, 11);
    EdgeGraph g = build_edge_graph(p);
    Objective c = seeded_objective(p, 5);
    for (auto _ : state)
        for (int start = 0; start < p.num_vertices(); ++start) {
            SolveReport rep = solve_lattice_lp(p, g, c, start);
            benchmark::DoNotOptimize(rep);
        }
}
BENCHMARK(BM_TwoPhaseSolve);

void BM_LexOrderOracle(benchmark::State& state) {
    for (auto _ : state) {
        LexOrderReport rep = verify_lex_order(2, 2, 5);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_LexOrderOracle);

void BM_ExactTinyDiameter(benchmark::State& state) {
    Polytope p5 = Polytope::from_points({{Rat(0), Rat(0)},
                                         {Rat(2), Rat(0)},
                                         {Rat(0), Rat(2)},
                                         {Rat(2), Rat(1)},
                                         {Rat(1), Rat(2)}});
    EdgeGraph g = build_edge_graph(p5);
    for (auto _ : state) {
        DiameterEstimate est = monotone_diameter_exact_tiny(p5, g);
        benchmark::DoNotOptimize(est);
    }
}
BENCHMARK(BM_ExactTinyDiameter);

}  // namespace

BENCHMARK_MAIN();
