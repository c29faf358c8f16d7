#include "harness.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <sstream>

#include "latpath/edge_graph.hpp"
#include "latpath/io.hpp"
#include "latpath/oracle.hpp"
#include "latpath/paths.hpp"

namespace latpath::harness {

const std::vector<std::string> kAllRules = {
    "half_integral", "level", "lattice_shadow", "two_phase", "sigma_max", "greatest_improvement",
};

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    cfg.rules = kAllRules;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("config: expected key=value, got \"" + line + "\"");
        std::string key = line.substr(first, eq - first);
        std::string val = line.substr(eq + 1);
        if (key == "manifest") {
            cfg.manifest_path = val;
        } else if (key == "outdir") {
            cfg.outdir = val;
        } else if (key == "rules") {
            cfg.rules.clear();
            std::istringstream rs(val);
            std::string r;
            while (std::getline(rs, r, ',')) {
                if (std::find(kAllRules.begin(), kAllRules.end(), r) == kAllRules.end())
                    throw ParseError("config: unknown rule \"" + r + "\"");
                cfg.rules.push_back(r);
            }
        } else if (key == "objective_count") {
            cfg.objective_count = static_cast<int>(parse_int(val).convert_to<long long>());
        } else if (key == "objective_seed") {
            cfg.objective_seed = parse_int(val).convert_to<std::uint64_t>();
        } else if (key == "objective_files") {
            std::istringstream fs(val);
            std::string f;
            while (std::getline(fs, f, ','))
                if (!f.empty()) cfg.objective_files.push_back(f);
        } else if (key == "starts") {
            if (val != "all" && val.rfind("sample:", 0) != 0)
                throw ParseError("config: starts must be \"all\" or \"sample:N\"");
            cfg.starts = val;
        } else if (key == "sigma_sample") {
            cfg.sigma_sample = static_cast<int>(parse_int(val).convert_to<long long>());
        } else if (key == "lemma8") {
            auto comma = val.find(',');
            if (comma == std::string::npos) throw ParseError("config: lemma8 takes \"n,k\"");
            cfg.lemma8 = {static_cast<int>(parse_int(val.substr(0, comma)).convert_to<long long>()),
                          parse_int(val.substr(comma + 1)).convert_to<long long>()};
        } else if (key == "diameter_sampled") {
            cfg.diameter_sampled = static_cast<int>(parse_int(val).convert_to<long long>());
        } else {
            throw ParseError("config: unknown key \"" + key + "\"");
        }
    }
    if (cfg.manifest_path.empty()) throw ParseError("config: manifest= is required");
    if (cfg.outdir.empty()) throw ParseError("config: outdir= is required");
    if (cfg.objective_count < 1) throw ParseError("config: objective_count must be positive");
    return cfg;
}

std::vector<GenSpec> load_manifest(const std::string& path) {
    std::vector<GenSpec> specs = parse_manifest(read_text_file(path));
    if (const char* env = std::getenv("LAB_SEED")) {
        std::uint64_t base = parse_int(env).convert_to<std::uint64_t>();
        for (std::size_t i = 0; i < specs.size(); ++i)
            specs[i].seed = base + static_cast<std::uint64_t>(i);
    }
    return specs;
}

bool rule_compatible(const std::string& rule, const Polytope& p, std::string* why) {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (rule == "half_integral") {
        if (!is_half_integral_vertex_set(p.vertices()))
            return fail("half_integral requires vertices in {0,1/2,1}^n (or a recentering of it)");
        return true;
    }
    if (rule == "level") return true;
    if (!p.vrep().box_k) return fail("rule requires a (0,k)-lattice polytope");
    return true;
}

SolveReport run_rule(const std::string& rule, const Polytope& p, const EdgeGraph& g,
                     const Objective& c, int start, const SignedPermutation* sigma) {
    if (rule == "half_integral") return solve_half_integral(p, g, c, start);
    if (rule == "level") return solve_level(p, g, c, start);
    if (rule == "lattice_shadow") return lattice_shadow_solve(p, g, c, start);
    if (rule == "two_phase") return solve_lattice_lp(p, g, c, start);
    if (rule == "sigma_max") {
        if (!sigma) throw PreconditionError("sigma_max needs a signed permutation");
        return path_from_sigma_max(p, g, *sigma, c);
    }
    if (rule == "greatest_improvement") {
        if (!sigma) throw PreconditionError("greatest_improvement needs a signed permutation");
        return solve_greatest_improvement(p, g, *sigma, start);
    }
    throw PreconditionError("unknown rule \"" + rule + "\"");
}

std::vector<Objective> instance_objectives(const Polytope& p, const std::string& instance_name,
                                           int count, std::uint64_t seed) {
    Xorshift64Star rng(seed ^ fnv1a(instance_name));
    std::vector<Objective> out;
    for (int i = 0; i < count; ++i) {
        QVec c(p.n());
        for (int j = 0; j < p.n(); ++j) c[j] = Rat(Int(rng.range(-9, 9)));
        out.push_back(with_tiebreak(Objective{std::move(c), {}}, p.vertices()));
    }
    return out;
}

namespace {

std::vector<int> pick_starts(const Polytope& p, const std::string& mode,
                             const std::string& instance_name, std::uint64_t seed) {
    const int nv = p.num_vertices();
    if (mode == "all") {
        std::vector<int> all(nv);
        for (int i = 0; i < nv; ++i) all[i] = i;
        return all;
    }
    int want = static_cast<int>(parse_int(mode.substr(7)).convert_to<long long>());
    Xorshift64Star rng(seed ^ fnv1a(instance_name) ^ 0xA5A5A5A5A5A5A5A5ULL);
    std::vector<int> picked;
    for (int i = 0; i < want * 4 && static_cast<int>(picked.size()) < want; ++i) {
        int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(nv)));
        if (std::find(picked.begin(), picked.end(), v) == picked.end()) picked.push_back(v);
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

std::vector<SignedPermutation> pick_sigmas(const Polytope& p, int sample,
                                           const std::string& instance_name, std::uint64_t seed) {
    std::vector<SignedPermutation> out{SignedPermutation::identity(p.n())};
    Xorshift64Star rng(seed ^ fnv1a(instance_name) ^ 0x0F0F0F0F0F0F0F0FULL);
    for (int i = 0; i < sample; ++i) out.push_back(random_signed_permutation(p.n(), rng));
    return out;
}

struct RuleTally {
    long long runs = 0;
    long long failures = 0;
    Rat worst_ratio = 0;  // max observed/declared over headline bounds
};

}  // namespace

VerifyOutcome run_verify(const RunConfig& cfg) {
    std::vector<GenSpec> specs = load_manifest(cfg.manifest_path);

    VerifyOutcome out;
    std::ostringstream results, bounds;
    results << csv_header() << "\n";
    std::map<std::string, RuleTally> tally;
    std::vector<std::string> extra_summary_lines;

    auto record = [&](const std::string& run_id, const std::string& rule,
                      const InstanceMetrics& met, const SolveReport& rep, const Rat& opt_value,
                      bool oracle_ok, const std::string& oracle_note) {
        ++out.runs;
        RuleTally& t = tally[rule];
        ++t.runs;
        results << csv_row(run_id, rule, met, rep, opt_value) << "\n";
        bool run_ok = oracle_ok;
        for (const BoundCheck& b : rep.bound_checks) {
            bounds << std::left << std::setw(44) << run_id << " " << std::setw(22) << b.name << " "
                   << std::setw(10) << b.declared.str() << " " << std::setw(10) << b.observed.str()
                   << " " << (b.ok() ? "ok" : "VIOLATION") << "\n";
            if (!b.ok()) run_ok = false;
        }
        if (!oracle_ok)
            bounds << std::left << std::setw(44) << run_id << " " << std::setw(22) << "oracle"
                   << " " << std::setw(10) << "-" << " " << std::setw(10) << "-"
                   << " MISMATCH " << oracle_note << "\n";
        if (rep.headline().declared > 0) {
            Rat ratio = Rat(rep.headline().observed) / Rat(rep.headline().declared);
            if (ratio > t.worst_ratio) t.worst_ratio = ratio;
        }
        if (!run_ok) {
            ++out.failures;
            ++t.failures;
            out.counterexamples.push_back(run_id);
        }
    };

    for (const GenSpec& spec : specs) {
        Polytope p = generate(spec);
        EdgeGraph g = build_edge_graph(p);
        InstanceMetrics met = collect_metrics(p);
        const std::string iname = spec.name();
        std::vector<Objective> objectives =
            instance_objectives(p, iname, cfg.objective_count, cfg.objective_seed);
        for (const std::string& f : cfg.objective_files) {
            Objective o = read_objective_file(f);
            if (o.n() != p.n()) continue;  // explicit objectives apply where dimensions match
            if (!is_total_on(o, p.vertices())) o = with_tiebreak(o, p.vertices());
            objectives.push_back(std::move(o));
        }
        std::vector<int> starts = pick_starts(p, cfg.starts, iname, cfg.objective_seed);

        for (const std::string& rule : cfg.rules) {
            if (!rule_compatible(rule, p)) continue;

            if (rule == "sigma_max") {
                auto sigmas = pick_sigmas(p, cfg.sigma_sample, iname, cfg.objective_seed);
                for (std::size_t si = 0; si < sigmas.size(); ++si) {
                    SigmaFlag flag = sigma_flag(p, sigmas[si]);
                    for (std::size_t oi = 0; oi < objectives.size(); ++oi) {
                        SolveReport rep = run_rule(rule, p, g, objectives[oi], flag.g0, &sigmas[si]);
                        Optimum bo = brute_force_optimum(p.vertices(), objectives[oi]);
                        // The shortest monotone path from G_0 can be no longer
                        // than the constructed one, and must meet the same bound.
                        int bfs = shortest_monotone_distance(g, p.vertices(), objectives[oi], flag.g0);
                        SolveReport withbfs = rep;
                        withbfs.bound_checks.push_back(
                            {"bfs_le_path", Int(rep.trace.length()), Int(bfs)});
                        withbfs.bound_checks.push_back(
                            {"bfs_le_dk", rep.headline().declared, Int(bfs)});
                        std::string run_id =
                            iname + "#sigma" + std::to_string(si) + "#o" + std::to_string(oi);
                        bool ok = bo.unique && bo.index == rep.optimum;
                        record(run_id, rule, met, withbfs,
                               dot(objectives[oi].primary, p.vertex(rep.optimum)), ok,
                               ok ? "" : "optimum disagrees with brute force");
                    }
                }
                continue;
            }

            if (rule == "greatest_improvement") {
                auto sigmas = pick_sigmas(p, cfg.sigma_sample, iname, cfg.objective_seed);
                const Int k = *p.vrep().box_k;
                for (std::size_t si = 0; si < sigmas.size(); ++si) {
                    Objective xs{build_x_sigma(sigmas[si], k, 2 * k + 1), {}};
                    for (int start : starts) {
                        SolveReport rep = run_rule(rule, p, g, xs, start, &sigmas[si]);
                        Optimum bo = brute_force_optimum(p.vertices(), xs);
                        std::string run_id = iname + "#sigma" + std::to_string(si) + "#v" +
                                             std::to_string(start);
                        bool ok = bo.unique && bo.index == rep.optimum;
                        record(run_id, rule, met, rep, dot(xs.primary, p.vertex(rep.optimum)), ok,
                               ok ? "" : "optimum disagrees with brute force");
                    }
                }
                continue;
            }

            for (std::size_t oi = 0; oi < objectives.size(); ++oi) {
                Optimum bo = brute_force_optimum(p.vertices(), objectives[oi]);
                for (int start : starts) {
                    SolveReport rep = run_rule(rule, p, g, objectives[oi], start, nullptr);
                    std::string run_id =
                        iname + "#o" + std::to_string(oi) + "#v" + std::to_string(start);
                    bool ok = bo.unique && bo.index == rep.optimum;
                    record(run_id, rule, met, rep,
                           dot(objectives[oi].primary, p.vertex(rep.optimum)), ok,
                           ok ? "" : "optimum disagrees with brute force");
                }
            }
        }

        if (cfg.diameter_sampled) {
            DiameterEstimate est =
                monotone_diameter_sampled(p, g, *cfg.diameter_sampled, cfg.objective_seed);
            extra_summary_lines.push_back("diameter_sampled(" +
                                          std::to_string(*cfg.diameter_sampled) + ") " + iname +
                                          ": " + std::to_string(est.value));
        }
    }

    if (cfg.lemma8) {
        auto [n, k] = *cfg.lemma8;
        LexOrderReport rep = verify_lex_order(n, Int(k), 2 * Int(k) + 1);
        std::ostringstream line;
        line << "lemma8: " << rep.sigma_count << " sigma, " << rep.pairs_per_sigma << " pairs, "
             << (rep.pass ? "ok" : "FAIL");
        extra_summary_lines.push_back(line.str());
        if (!rep.pass) {
            ++out.failures;
            out.counterexamples.push_back("lemma8");
        }
    }

    std::ostringstream summary;
    summary << "rule,runs,failures,worst_ratio_num,worst_ratio_den\n";
    for (const std::string& rule : cfg.rules) {
        const RuleTally& t = tally[rule];
        summary << rule << "," << t.runs << "," << t.failures << "," << num(t.worst_ratio).str()
                << "," << den(t.worst_ratio).str() << "\n";
    }
    for (const std::string& l : extra_summary_lines) summary << "# " << l << "\n";

    out.results_csv = results.str();
    out.summary_csv = summary.str();
    out.bounds_text = bounds.str();
    return out;
}

}  // namespace latpath::harness
