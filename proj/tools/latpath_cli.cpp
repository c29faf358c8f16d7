// Command-line harness: generation, solving, oracle checks and batch
// verification of pivot-rule bounds on exact lattice-polytope instances.
//
// Exit codes: 0 success; 1 usage or validation error; 2 a declared bound was
// violated or an optimum disagreed with the brute-force oracle.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "harness.hpp"
#include "latpath/edge_graph.hpp"
#include "latpath/io.hpp"
#include "latpath/metrics.hpp"
#include "latpath/oracle.hpp"
#include "latpath/paths.hpp"

namespace fs = std::filesystem;
using namespace latpath;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBound = 2;

void write_instance_files(const Polytope& p, const GenSpec& spec, const std::string& outdir) {
    fs::create_directories(outdir);
    const std::string stem = (fs::path(outdir) / spec.name()).string();
    write_hrep_file(stem + ".hrep", p.hrep());
    write_vrep_file(stem + ".vrep", p.vrep());
    std::cout << stem << ".hrep\n" << stem << ".vrep\n";
}

int cmd_gen(const std::string& spec_line, const std::string& manifest, const std::string& outdir) {
    if (spec_line.empty() == manifest.empty())
        throw ParseError("gen: give exactly one of --spec or --manifest");
    std::vector<GenSpec> specs;
    if (!spec_line.empty())
        specs.push_back(GenSpec::parse_line(spec_line));
    else
        specs = harness::load_manifest(manifest);
    for (const GenSpec& s : specs) write_instance_files(generate(s), s, outdir);
    return kExitOk;
}

int parse_start(const Polytope& p, const std::string& start, int start_index) {
    if (!start.empty()) {
        QVec x;
        std::istringstream ss(start);
        std::string tok;
        while (std::getline(ss, tok, ',')) x.push_back(parse_rational(tok));
        if (static_cast<int>(x.size()) != p.n())
            throw ParseError("start: expected " + std::to_string(p.n()) + " coordinates");
        int idx = p.vertex_index(x);
        if (idx < 0) throw ParseError("start: not a vertex of the polytope");
        return idx;
    }
    if (start_index < 0 || start_index >= p.num_vertices())
        throw ParseError("start index out of range (the instance has " +
                         std::to_string(p.num_vertices()) + " vertices)");
    return start_index;
}

int cmd_solve(const std::string& hrep_path, const std::string& obj_path, const std::string& rule,
              const std::string& start, int start_index, const std::string& sigma_path,
              const std::string& csv_path, const std::string& trace_path, bool no_auto_perturb) {
    Polytope p = Polytope::from_hrep(read_hrep_file(hrep_path));
    std::string why;
    if (!harness::rule_compatible(rule, p, &why)) throw ParseError("solve: " + why);

    Objective c = read_objective_file(obj_path);
    if (c.n() != p.n()) throw ParseError("objective dimension does not match the instance");
    if (!no_auto_perturb && !is_total_on(c, p.vertices())) c = with_tiebreak(c, p.vertices());

    SignedPermutation sigma = SignedPermutation::identity(p.n());
    if (!sigma_path.empty()) sigma = read_sigma_file(sigma_path);
    if (sigma.n() != p.n()) throw ParseError("signed permutation length does not match");

    EdgeGraph g = build_edge_graph(p);
    int start_id;
    if (rule == "sigma_max") {
        int g0 = sigma_flag(p, sigma).g0;
        start_id = (start.empty() && start_index < 0) ? g0 : parse_start(p, start, start_index);
        if (start_id != g0)
            throw ParseError("sigma_max must start at the x_sigma-maximal vertex v" +
                             std::to_string(g0));
    } else {
        start_id = parse_start(p, start, start_index);
    }

    const Objective& governing = [&]() -> const Objective& { return c; }();
    SolveReport rep = harness::run_rule(rule, p, g, c, start_id, &sigma);
    const Objective* oracle_obj = &governing;
    Objective xs;
    if (rule == "greatest_improvement") {
        xs = Objective{build_x_sigma(sigma, *p.vrep().box_k, 2 * *p.vrep().box_k + 1), {}};
        oracle_obj = &xs;
    }
    Optimum bo = brute_force_optimum(p.vertices(), *oracle_obj);

    InstanceMetrics met = collect_metrics(p);
    std::string instance_id = fs::path(hrep_path).stem().string() + "#v" + std::to_string(start_id);
    std::string row = csv_row(instance_id, rule, met, rep,
                              dot(oracle_obj->primary, p.vertex(rep.optimum)));
    if (!csv_path.empty()) {
        bool fresh = !fs::exists(csv_path) || fs::file_size(csv_path) == 0;
        std::ofstream csv(csv_path, std::ios::app | std::ios::binary);
        if (!csv) throw Error("cannot write " + csv_path);
        if (fresh) csv << csv_header() << "\n";
        csv << row << "\n";
    }
    std::string trace = trace_text(p, rep.trace);
    if (!trace_path.empty()) write_text_file(trace_path, trace);

    std::cout << trace;
    for (const BoundCheck& b : rep.bound_checks)
        std::cout << b.name << ": observed " << b.observed.str() << " <= declared "
                  << b.declared.str() << (b.ok() ? "  ok" : "  VIOLATION") << "\n";
    bool oracle_ok = bo.unique && bo.index == rep.optimum;
    std::cout << "optimum: v" << rep.optimum << " " << to_string(p.vertex(rep.optimum))
              << (oracle_ok ? "  matches oracle" : "  ORACLE MISMATCH") << "\n";
    std::cout << "sub-LPs: " << rep.sub_lp_count << "\n";

    if (!rep.all_bounds_ok()) {
        for (const BoundCheck& b : rep.bound_checks)
            if (!b.ok()) std::cerr << "bound violated: " << b.name << "\n";
        return kExitBound;
    }
    if (!oracle_ok) {
        std::cerr << "optimum does not match the brute-force oracle\n";
        return kExitBound;
    }
    return kExitOk;
}

int cmd_verify(const std::string& config_path) {
    harness::RunConfig cfg = harness::parse_config(read_text_file(config_path));
    harness::VerifyOutcome out = harness::run_verify(cfg);

    fs::create_directories(cfg.outdir);
    write_text_file((fs::path(cfg.outdir) / "results.csv").string(), out.results_csv);
    write_text_file((fs::path(cfg.outdir) / "summary.csv").string(), out.summary_csv);
    write_text_file((fs::path(cfg.outdir) / "bounds.txt").string(), out.bounds_text);

    std::cout << out.summary_csv;
    std::cout << "runs: " << out.runs << ", failures: " << out.failures << "\n";
    if (!out.ok()) {
        std::cerr << "counterexamples:\n";
        for (const std::string& id : out.counterexamples) std::cerr << "  " << id << "\n";
        return kExitBound;
    }
    return kExitOk;
}

int cmd_oracle(const std::string& hrep_path, bool exact_tiny, int sampled, std::uint64_t seed,
               const std::string& lemma8, const std::string& orientations_out) {
    if (!lemma8.empty()) {
        std::istringstream ss(lemma8);
        std::string tok;
        std::vector<long long> vals;
        while (std::getline(ss, tok, ',')) vals.push_back(parse_int(tok).convert_to<long long>());
        if (vals.size() < 2 || vals.size() > 3) throw ParseError("--lemma8 takes n,k[,alpha]");
        Int k(vals[1]);
        Int alpha = vals.size() == 3 ? Int(vals[2]) : Int(2 * vals[1] + 1);
        LexOrderReport rep = verify_lex_order(static_cast<int>(vals[0]), k, alpha);
        std::cout << "lemma8: " << rep.sigma_count << " sigma, " << rep.pairs_per_sigma
                  << " pairs, " << (rep.pass ? "ok" : "violation found") << "\n";
        if (rep.counterexample) {
            std::cout << "counterexample: sigma=(";
            for (int s : rep.counterexample->sigma.sigma) std::cout << s << " ";
            std::cout << ") x=" << to_string(to_rational(rep.counterexample->x))
                      << " y=" << to_string(to_rational(rep.counterexample->y)) << "\n";
        }
        return kExitOk;  // the probe reports; it does not assert
    }
    if (hrep_path.empty()) throw ParseError("oracle: --hrep is required unless --lemma8 is given");
    Polytope p = Polytope::from_hrep(read_hrep_file(hrep_path));
    EdgeGraph g = build_edge_graph(p);
    if (exact_tiny) {
        DiameterEstimate est = monotone_diameter_exact_tiny(p, g);
        std::cout << "exact monotone diameter: " << est.value << "\n";
        std::cout << "realizable orientations: " << est.orientations << "\n";
        std::cout << "witness objective: " << to_string(est.witness_objective.primary)
                  << " worst vertex: v" << est.witness_vertex << "\n";
        if (!orientations_out.empty()) {
            std::ostringstream body;
            for (const std::string& pat : est.orientation_patterns) body << pat << "\n";
            write_text_file(orientations_out, body.str());
        }
        return kExitOk;
    }
    if (sampled > 0) {
        DiameterEstimate est = monotone_diameter_sampled(p, g, sampled, seed);
        std::cout << "sampled monotone diameter lower bound: " << est.value << "\n";
        std::cout << "witness objective: " << to_string(est.witness_objective.primary)
                  << " worst vertex: v" << est.witness_vertex << "\n";
        return kExitOk;
    }
    throw ParseError("oracle: choose --exact-tiny, --sampled N or --lemma8 n,k");
}

int cmd_metrics(const std::string& hrep_path) {
    Polytope p = Polytope::from_hrep(read_hrep_file(hrep_path));
    MatrixMetrics mm = matrix_metrics(p.hrep());
    LevelProfile lp = level_profile(p);
    std::cout << "n: " << p.n() << "\nrows: " << p.hrep().rows.size() << "\ndim: " << p.dim()
              << "\nvertices: " << p.num_vertices() << "\n";
    std::cout << "box_k: "
              << (p.vrep().box_k ? p.vrep().box_k->str() : std::string("-")) << "\n";
    std::cout << "a_inf: " << mm.a_inf.str() << "\nrow_support: " << mm.max_support << "\n";
    std::cout << "max_subdet: " << (mm.max_subdet ? mm.max_subdet->str() : std::string("skipped"))
              << "\n";
    std::cout << "level: " << lp.overall << "\nlevel_profile:";
    for (int c : lp.per_row) std::cout << " " << c;
    std::cout << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pivot-rule laboratory for lattice polytopes"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate instances and write H-rep/V-rep files");
    std::string gen_spec, gen_manifest, gen_out = ".";
    gen->add_option("--spec", gen_spec, "single GenSpec line, e.g. family=cube,n=3,k=1,seed=42");
    gen->add_option("--manifest", gen_manifest, "manifest file with one GenSpec per line");
    gen->add_option("-o,--outdir", gen_out, "output directory");

    auto* solve = app.add_subcommand("solve", "run one pivot rule on one instance");
    std::string s_hrep, s_obj, s_rule, s_start, s_sigma, s_csv, s_trace;
    int s_start_index = -1;
    bool s_noperturb = false;
    solve->add_option("--hrep", s_hrep, "instance H-rep file")->required();
    solve->add_option("--objective", s_obj, "objective file")->required();
    solve->add_option("--rule", s_rule, "one of: half_integral level lattice_shadow two_phase sigma_max greatest_improvement")
        ->required();
    solve->add_option("--start", s_start, "start vertex coordinates, comma separated");
    solve->add_option("--start-index", s_start_index, "start vertex index (canonical order)");
    solve->add_option("--sigma", s_sigma, "signed permutation file (sigma rules)");
    solve->add_option("--csv", s_csv, "append a result row to this CSV file");
    solve->add_option("--trace", s_trace, "write the trace listing to this file");
    solve->add_flag("--no-auto-perturb", s_noperturb,
                    "do not append the default tie-break perturbation");

    auto* verify = app.add_subcommand("verify", "run a full corpus of bound checks");
    std::string v_config;
    verify->add_option("--config", v_config, "flat key=value config file")->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
    std::string o_hrep, o_lemma8, o_orient;
    bool o_exact = false;
    int o_sampled = 0;
    std::uint64_t o_seed = 1;
    oracle->add_option("--hrep", o_hrep, "instance H-rep file");
    oracle->add_flag("--exact-tiny", o_exact, "exact monotone diameter (n<=3, <=12 vertices)");
    oracle->add_option("--sampled", o_sampled, "sampled monotone diameter lower bound");
    oracle->add_option("--seed", o_seed, "sampling seed");
    oracle->add_option("--lemma8", o_lemma8, "exhaustive lexicographic-order check: n,k[,alpha]");
    oracle->add_option("--orientations-out", o_orient, "write realizable orientations here");

    auto* metrics = app.add_subcommand("metrics", "print instance metrics");
    std::string m_hrep;
    metrics->add_option("--hrep", m_hrep, "instance H-rep file")->required();

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return cmd_gen(gen_spec, gen_manifest, gen_out);
        if (solve->parsed())
            return cmd_solve(s_hrep, s_obj, s_rule, s_start, s_start_index, s_sigma, s_csv,
                             s_trace, s_noperturb);
        if (verify->parsed()) return cmd_verify(v_config);
        if (oracle->parsed())
            return cmd_oracle(o_hrep, o_exact, o_sampled, o_seed, o_lemma8, o_orient);
        if (metrics->parsed()) return cmd_metrics(m_hrep);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GeometryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitBound;
    }
}
