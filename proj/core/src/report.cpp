#include "latpath/report.hpp"

#include <sstream>

namespace latpath {

std::string csv_header() {
    return "schema,instance,rule,d,n,k,a_inf,m,s,declared,observed,opt_num,opt_den";
}

InstanceMetrics collect_metrics(const Polytope& p) {
    InstanceMetrics m;
    m.d = p.dim();
    m.n = p.n();
    m.k = p.vrep().box_k.value_or(Int(0));
    MatrixMetrics mm = matrix_metrics(p.hrep(), false);
    m.a_inf = mm.a_inf;
    m.level_m = level_profile(p).overall - 1;
    m.support_s = mm.max_support;
    return m;
}

std::string csv_row(const std::string& instance_id, const std::string& rule,
                    const InstanceMetrics& m, const SolveReport& rep, const Rat& optimum_value) {
    std::ostringstream s;
    s << kCsvSchemaVersion << "," << instance_id << "," << rule << "," << m.d << "," << m.n << ","
      << m.k.str() << "," << m.a_inf.str() << "," << m.level_m << "," << m.support_s << ","
      << rep.headline().declared.str() << "," << rep.headline().observed.str() << ","
      << num(optimum_value).str() << "," << den(optimum_value).str();
    return s.str();
}

std::string trace_text(const Polytope& p, const PathTrace& t) {
    std::ostringstream s;
    s << "path of length " << t.length() << " (declared bound " << t.declared_bound.str() << ")\n";
    for (std::size_t i = 0; i < t.vertices.size(); ++i) {
        s << "  v" << t.vertices[i] << " " << to_string(p.vertex(t.vertices[i]));
        if (i < t.steps.size())
            s << "  --" << t.steps[i].rule << " aux=" << to_string(t.steps[i].aux) << "-->";
        s << "\n";
    }
    return s.str();
}

}  // namespace latpath
