// Acceptance suite: every criterion the library ships against, each printed
// as one pass/fail line. Exits nonzero when any criterion fails. Expected
// values come from hand-checked small instances and from the independent
// brute-force oracles; tolerances are exact rational equality throughout.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "latpath/edge_graph.hpp"
#include "latpath/generators.hpp"
#include "latpath/io.hpp"
#include "latpath/metrics.hpp"
#include "latpath/oracle.hpp"
#include "latpath/report.hpp"
#include "latpath/solvers.hpp"

namespace fs = std::filesystem;
using namespace latpath;
using Clock = std::chrono::steady_clock;

namespace {

long long coherent_traces = 0;  // tallied across criteria for criterion 2

struct Instance {
    GenSpec spec;
    Polytope p;
    EdgeGraph g;
};

Instance make(const std::string& line) {
    GenSpec spec = GenSpec::parse_line(line);
    Polytope p = generate(spec);
    EdgeGraph g = build_edge_graph(p);
    return Instance{spec, std::move(p), std::move(g)};
}

Polytope pentagon() {
    return Polytope::from_points({{Rat(0), Rat(0)},
                                  {Rat(2), Rat(0)},
                                  {Rat(0), Rat(2)},
                                  {Rat(2), Rat(1)},
                                  {Rat(1), Rat(2)}});
}

// Same construction as the CLI harness: seeded integer vectors in [-9,9]^n,
// each made generic with the alpha-power tie-break.
std::vector<Objective> seeded_objectives(const Polytope& p, const std::string& name, int count,
                                         std::uint64_t seed) {
    Xorshift64Star rng(seed ^ fnv1a(name));
    std::vector<Objective> out;
    for (int i = 0; i < count; ++i) {
        QVec c(p.n());
        for (int j = 0; j < p.n(); ++j) c[j] = Rat(Int(rng.range(-9, 9)));
        out.push_back(with_tiebreak(Objective{std::move(c), {}}, p.vertices()));
    }
    return out;
}

bool solved_to_oracle(const Polytope& p, const SolveReport& rep, const Objective& o,
                      std::ostringstream& why) {
    if (!rep.all_bounds_ok()) {
        for (const BoundCheck& b : rep.bound_checks)
            if (!b.ok())
                why << "bound " << b.name << " violated (" << b.observed.str() << " > "
                    << b.declared.str() << "); ";
        return false;
    }
    Optimum bo = brute_force_optimum(p.vertices(), o);
    if (!bo.unique) {
        why << "oracle tie under a perturbed objective; ";
        return false;
    }
    if (bo.index != rep.optimum) {
        why << "optimum v" << rep.optimum << " != oracle v" << bo.index << "; ";
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Criterion bodies
// ---------------------------------------------------------------------------

bool c1_lemma8(std::ostringstream& out) {
    long long sigmas = 0, comparisons = 0;
    for (int n = 1; n <= 3; ++n)
        for (long long k = 1; k <= 3; ++k) {
            LexOrderReport rep = verify_lex_order(n, Int(k), Int(2 * k + 1));
            if (!rep.pass) {
                out << "mismatch at n=" << n << " k=" << k;
                return false;
            }
            sigmas += rep.sigma_count;
            comparisons += rep.sigma_count * rep.pairs_per_sigma;
        }
    out << sigmas << " signed permutations, " << comparisons << " comparisons, 0 mismatches";
    return true;
}

std::vector<std::string> half_integral_corpus() {
    std::vector<std::string> lines;
    for (int n = 2; n <= 5; ++n)
        for (std::uint64_t seed = 1; seed <= 14; ++seed) {
            int pts = n + 4 + static_cast<int>(seed % 4);
            lines.push_back("family=half_integral_hull,n=" + std::to_string(n) +
                            ",points=" + std::to_string(pts) + ",seed=" + std::to_string(seed));
        }
    return lines;
}

bool c3_half_integral(std::ostringstream& out) {
    long long runs = 0, hulls = 0, uniform_runs = 0;
    std::vector<std::string> corpus = half_integral_corpus();
    // uniform-support coverage: dilated 0/1 hulls land in {-1,1}^n after
    // recentering, and the unshifted cross-polytopes have support 1
    corpus.push_back("family=dilated_01_hull,n=3,k=2,points=10,seed=4");
    corpus.push_back("family=dilated_01_hull,n=4,k=2,points=12,seed=6");
    corpus.push_back("family=cross_polytope,n=3,shifted=0,seed=0");
    corpus.push_back("family=cross_polytope,n=4,shifted=0,seed=0");

    for (const std::string& line : corpus) {
        Instance inst = make(line);
        if (inst.spec.family == Family::half_integral_hull) ++hulls;
        for (const Objective& c : seeded_objectives(inst.p, inst.spec.name(), 20, 2026))
            for (int start = 0; start < inst.p.num_vertices(); ++start) {
                SolveReport rep = solve_half_integral(inst.p, inst.g, c, start);
                ++coherent_traces;
                std::ostringstream why;
                if (!solved_to_oracle(inst.p, rep, c, why)) {
                    out << inst.spec.name() << "#v" << start << ": " << why.str();
                    return false;
                }
                for (const BoundCheck& b : rep.bound_checks)
                    if (b.name == "uniform_support_2s") ++uniform_runs;
                ++runs;
            }
    }
    out << runs << " solves over " << hulls << " seeded hulls (+4 extra instances), "
        << uniform_runs << " runs under the uniform-support bound";
    return hulls >= 50 && uniform_runs > 0;
}

bool c4_level(std::ostringstream& out) {
    long long runs = 0;
    std::vector<std::string> corpus;
    for (int n = 3; n <= 5; ++n)
        for (std::uint64_t seed = 1; seed <= 5; ++seed)
            corpus.push_back("family=order_polytope,n=" + std::to_string(n) +
                             ",seed=" + std::to_string(seed));
    for (std::uint64_t seed = 1; seed <= 8; ++seed)
        corpus.push_back("family=lattice_hull,n=3,k=3,points=12,seed=" + std::to_string(seed));

    for (const std::string& line : corpus) {
        Instance inst = make(line);
        const int m = level_profile(inst.p).overall - 1;
        const Int bound = Int(inst.p.dim() - 1) * m + 1;
        for (const Objective& c : seeded_objectives(inst.p, inst.spec.name(), 20, 2027))
            for (int start = 0; start < inst.p.num_vertices(); ++start) {
                SolveReport rep = solve_level(inst.p, inst.g, c, start);
                coherent_traces += rep.sub_lp_count;
                std::ostringstream why;
                if (!solved_to_oracle(inst.p, rep, c, why) || Int(rep.trace.length()) > bound) {
                    out << inst.spec.name() << "#v" << start << ": " << why.str();
                    return false;
                }
                ++runs;
            }
    }

    // the pentagon: m = 2, d = 2, every start, twenty objectives, length <= 3
    Polytope p5 = pentagon();
    EdgeGraph g5 = build_edge_graph(p5);
    if (level_profile(p5).overall != 3) {
        out << "pentagon level != 3";
        return false;
    }
    for (const Objective& c : seeded_objectives(p5, "pentagon", 20, 2028))
        for (int start = 0; start < 5; ++start) {
            SolveReport rep = solve_level(p5, g5, c, start);
            coherent_traces += rep.sub_lp_count;
            std::ostringstream why;
            if (!solved_to_oracle(p5, rep, c, why) || rep.trace.length() > 3) {
                out << "pentagon#v" << start << ": length " << rep.trace.length() << " > 3 "
                    << why.str();
                return false;
            }
            ++runs;
        }
    out << runs << " level-solver runs, all monotone, optimal, within (d-1)m+1";
    return true;
}

std::vector<std::string> lattice_corpus() {
    std::vector<std::string> lines;
    for (int n = 2; n <= 4; ++n)
        for (long long k = 2; k <= 3; ++k)
            for (std::uint64_t seed = 1; seed <= 9; ++seed) {
                int pts = 3 * n + static_cast<int>(seed % 3);
                lines.push_back("family=lattice_hull,n=" + std::to_string(n) +
                                ",k=" + std::to_string(k) + ",points=" + std::to_string(pts) +
                                ",seed=" + std::to_string(seed));
            }
    return lines;
}

bool c5_lattice_shadow(std::ostringstream& out) {
    long long runs = 0, hulls = 0;
    for (const std::string& line : lattice_corpus()) {
        Instance inst = make(line);
        ++hulls;
        for (const Objective& c : seeded_objectives(inst.p, inst.spec.name(), 20, 2029))
            for (int start = 0; start < inst.p.num_vertices(); ++start) {
                SolveReport rep = lattice_shadow_solve(inst.p, inst.g, c, start);
                ++coherent_traces;
                std::ostringstream why;
                if (!solved_to_oracle(inst.p, rep, c, why)) {
                    out << inst.spec.name() << "#v" << start << ": " << why.str();
                    return false;
                }
                ++runs;
            }
    }
    out << runs << " shadow solves over " << hulls << " hulls; dnk|A|, |d|nk and |d|<=d|A| held";
    return hulls >= 50;
}

bool c6_sigma_start(std::ostringstream& out) {
    long long checks = 0;
    for (const std::string& line : lattice_corpus()) {
        Instance inst = make(line);
        const Int dk = Int(inst.p.dim()) * *inst.p.vrep().box_k;
        std::vector<SignedPermutation> sigmas{SignedPermutation::identity(inst.p.n())};
        Xorshift64Star rng(fnv1a(inst.spec.name()) ^ 0x0F0F0F0F0F0F0F0FULL);
        for (int i = 0; i < 10; ++i) sigmas.push_back(random_signed_permutation(inst.p.n(), rng));
        std::vector<Objective> objectives = seeded_objectives(inst.p, inst.spec.name(), 20, 2030);
        for (const SignedPermutation& sigma : sigmas) {
            for (const Objective& c : objectives) {
                SolveReport rep = path_from_sigma_max(inst.p, inst.g, sigma, c);
                coherent_traces += rep.sub_lp_count;
                int bfs = shortest_monotone_distance(inst.g, inst.p.vertices(), c,
                                                     rep.trace.start());
                std::ostringstream why;
                if (!solved_to_oracle(inst.p, rep, c, why) || Int(bfs) > dk ||
                    bfs > rep.trace.length()) {
                    out << inst.spec.name() << ": bfs " << bfs << " path " << rep.trace.length()
                        << " dk " << dk.str() << " " << why.str();
                    return false;
                }
                ++checks;
            }
        }
    }
    out << checks << " sigma-start checks: BFS distance <= constructed path <= dk";
    return true;
}

bool c7_two_phase(std::ostringstream& out) {
    long long runs = 0;
    for (const std::string& line : lattice_corpus()) {
        Instance inst = make(line);
        for (const Objective& c : seeded_objectives(inst.p, inst.spec.name(), 20, 2031))
            for (int start = 0; start < inst.p.num_vertices(); ++start) {
                SolveReport rep = solve_lattice_lp(inst.p, inst.g, c, start);
                validate_walk(rep.trace, inst.g);
                std::ostringstream why;
                if (!solved_to_oracle(inst.p, rep, c, why)) {
                    out << inst.spec.name() << "#v" << start << ": " << why.str();
                    return false;
                }
                ++runs;
            }
    }
    out << runs << " two-phase solves: total, phase-A and sub-LP bounds held, walks valid";
    return true;
}

bool c2_coherent_census(std::ostringstream& out) {
    // Every coherent trace validates length <= |{d.v}| - 1 at construction
    // (an InternalError otherwise would have failed its criterion). Add full
    // d-monotone sweeps so both stop conventions are covered, then check the
    // census volume.
    Polytope p5 = pentagon();
    EdgeGraph g5 = build_edge_graph(p5);
    for (const Objective& c : seeded_objectives(p5, "pentagon-sweep", 25, 2032)) {
        for (int dx = -2; dx <= 2; ++dx)
            for (int dy = -2; dy <= 2; ++dy) {
                if (dx == 0 && dy == 0) continue;
                Objective d{{Rat(dx), Rat(dy)}, {}};
                Rat dmin = dot(d.primary, p5.vertex(0));
                int arg = 0;
                for (int v = 1; v < 5; ++v)
                    if (dot(d.primary, p5.vertex(v)) < dmin) {
                        dmin = dot(d.primary, p5.vertex(v));
                        arg = v;
                    }
                int best = arg;
                for (int v = 0; v < 5; ++v)
                    if (dot(d.primary, p5.vertex(v)) == dmin &&
                        objective_compare(c, p5.vertex(v), p5.vertex(best)) > 0)
                        best = v;
                PathTrace t = coherent_sweep(g5, p5.vertices(), c, d, best);
                ++coherent_traces;
                if (Int(t.length()) > t.declared_bound) {
                    out << "sweep exceeded census bound";
                    return false;
                }
            }
    }
    out << coherent_traces << " coherent traces checked against |{d.v}|-1, 0 violations";
    return coherent_traces >= 1000;
}

bool c8_diameter_oracles(std::ostringstream& out) {
    auto t0 = Clock::now();
    Polytope p5 = pentagon();
    EdgeGraph g5 = build_edge_graph(p5);
    DiameterEstimate e5 = monotone_diameter_exact_tiny(p5, g5);
    double s1 = std::chrono::duration<double>(Clock::now() - t0).count();

    t0 = Clock::now();
    Polytope tri = Polytope::from_points({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
    EdgeGraph gt = build_edge_graph(tri);
    DiameterEstimate et = monotone_diameter_exact_tiny(tri, gt);
    double s2 = std::chrono::duration<double>(Clock::now() - t0).count();

    t0 = Clock::now();
    Instance cube = make("family=cube,n=3,k=1,seed=0");
    DiameterEstimate ec = monotone_diameter_sampled(cube.p, cube.g, 200, 7);
    double s3 = std::chrono::duration<double>(Clock::now() - t0).count();

    out << "pentagon exact " << e5.value << ", simplex exact " << et.value << ", cube sampled "
        << ec.value << " (" << s1 << "s/" << s2 << "s/" << s3 << "s)";
    return e5.value == 2 && et.value == 1 && ec.value == 3 && s1 < 5.0 && s2 < 5.0 && s3 < 5.0;
}

bool c9_cli_determinism(std::ostringstream& out) {
    const std::string cli = LATPATH_CLI_PATH;
    const fs::path config_dir = LATPATH_CONFIG_DIR;
    fs::path tmp = fs::temp_directory_path() / "latpath_acceptance";
    fs::remove_all(tmp);
    fs::create_directories(tmp);

    // The shipped config, with its relative paths anchored for this run.
    std::string shipped = read_text_file((config_dir / "desk.cfg").string());
    auto materialize = [&](const std::string& outdir) {
        std::string cfg = shipped;
        auto replace = [&cfg](const std::string& key, const std::string& value) {
            auto pos = cfg.find(key + "=");
            if (pos == std::string::npos) throw ParseError("shipped config lacks " + key + "=");
            auto end = cfg.find('\n', pos);
            cfg.replace(pos, end - pos, key + "=" + value);
        };
        replace("manifest", (config_dir / "desk_corpus.txt").string());
        replace("outdir", outdir);
        return cfg;
    };
    write_text_file((tmp / "cfg1").string(), materialize((tmp / "out1").string()));
    write_text_file((tmp / "cfg2").string(), materialize((tmp / "out2").string()));

    for (const char* cfg : {"cfg1", "cfg2"}) {
        std::string cmd = cli + " verify --config " + (tmp / cfg).string() + " > " +
                          (tmp / (std::string(cfg) + ".log")).string() + " 2>&1";
        int rc = std::system(cmd.c_str());
        if (WEXITSTATUS(rc) != 0) {
            out << "verify exited with " << WEXITSTATUS(rc) << " on " << cfg;
            return false;
        }
    }
    for (const char* f : {"results.csv", "summary.csv", "bounds.txt"}) {
        std::string a = read_text_file((tmp / "out1" / f).string());
        std::string b = read_text_file((tmp / "out2" / f).string());
        if (a != b) {
            out << f << " differs between reruns";
            return false;
        }
        if (a.empty()) {
            out << f << " is empty";
            return false;
        }
    }
    out << "two verify runs on the shipped config produced byte-identical outputs";
    return true;
}

}  // namespace

int main() {
    struct Row {
        int id;
        const char* title;
        bool pass;
        std::string detail;
        double seconds;
    };
    std::vector<Row> rows;

    auto run = [&](int id, const char* title, auto body) {
        auto t0 = Clock::now();
        Row r{id, title, false, "", 0.0};
        try {
            std::ostringstream detail;
            r.pass = body(detail);
            r.detail = detail.str();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        rows.push_back(std::move(r));
    };

    // Criteria 3..7 run before 2 so the coherent-trace census covers them;
    // output is printed in criterion order.
    run(1, "lexicographic-order oracle (exhaustive)", [](std::ostringstream& o) {
        bool ok = c1_lemma8(o);
        return ok;
    });
    run(3, "half-integral solver bounds (3d / d+2n / 2s)", c3_half_integral);
    run(4, "level solver bound ((d-1)m+1)", c4_level);
    run(5, "lattice shadow rule bound (dnk|A|)", c5_lattice_shadow);
    run(6, "sigma-start monotone distance (dk)", c6_sigma_start);
    run(7, "two-phase solver (d(k+k/2), 2n sub-LPs)", c7_two_phase);
    run(2, "coherent path census bound (|{d.v}|-1)", c2_coherent_census);
    run(8, "monotone diameter oracles", c8_diameter_oracles);
    run(9, "CLI verify determinism", c9_cli_determinism);

    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.id < b.id; });

    bool time_ok = true;
    int failures = 0;
    for (const Row& r : rows) {
        double limit = r.id == 1 ? 10.0 : (r.id == 3 ? 60.0 : 0.0);
        bool within = limit == 0.0 || r.seconds <= limit;
        if (!within) time_ok = false;
        bool pass = r.pass && within;
        if (!pass) ++failures;
        std::ostringstream line;
        line << (pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << " — "
             << r.detail;
        line << " [" << std::fixed << r.seconds << "s";
        if (limit > 0.0) line << " < " << limit << "s limit";
        line << "]";
        std::cout << line.str() << "\n";
    }
    (void)time_ok;
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " (" << failures
              << " failures)\n";
    return failures == 0 ? 0 : 1;
}
