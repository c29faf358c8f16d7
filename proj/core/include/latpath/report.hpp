#pragma once

#include "latpath/metrics.hpp"
#include "latpath/solvers.hpp"

// CSV serialization of solve results. Schema v1, fixed column order, rational
// values as "num/den"; output is bytewise deterministic for fixed inputs.

namespace latpath {

inline constexpr int kCsvSchemaVersion = 1;

/// "schema,instance,rule,d,n,k,a_inf,m,s,declared,observed,opt_num,opt_den"
std::string csv_header();

struct InstanceMetrics {
    int d = 0;
    int n = 0;
    Int k = 0;        // 0 when the instance is not a lattice polytope
    Int a_inf = 0;
    int level_m = 0;  // level minus one
    int support_s = 0;
};

InstanceMetrics collect_metrics(const Polytope& p);

/// One row per solve, carrying the rule's headline bound and the optimum value
/// of the governing objective's primary vector.
std::string csv_row(const std::string& instance_id, const std::string& rule,
                    const InstanceMetrics& m, const SolveReport& rep, const Rat& optimum_value);

/// Human-readable trace listing: one line per visited vertex with the rule
/// and auxiliary direction of the step that led there.
std::string trace_text(const Polytope& p, const PathTrace& t);

}  // namespace latpath
