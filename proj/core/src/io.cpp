#include "latpath/io.hpp"

#include <fstream>
#include <sstream>

namespace latpath {

namespace {

// Line-oriented strict tokenizer. Rejects CR characters so CRLF input fails
// loudly instead of parsing "1\r" as a token.
class LineReader {
  public:
    explicit LineReader(std::istream& in) : in_(in) {}

    std::vector<std::string> next_tokens() {
        std::string line;
        if (!std::getline(in_, line)) throw ParseError("unexpected end of input");
        if (line.find('\r') != std::string::npos)
            throw ParseError("CR in input; files must use LF line endings");
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        return toks;
    }

    void expect_eof() {
        std::string line;
        while (std::getline(in_, line)) {
            if (line.find_first_not_of(" \t") != std::string::npos)
                throw ParseError("trailing data after the declared line count");
        }
    }

  private:
    std::istream& in_;
};

std::pair<int, int> parse_header(LineReader& r, const char* what) {
    auto toks = r.next_tokens();
    if (toks.size() != 2) throw ParseError(std::string(what) + ": header must be two integers");
    Int a = parse_int(toks[0]), b = parse_int(toks[1]);
    if (a < 1 || a > 64 || b < 0 || b > 100000)
        throw ParseError(std::string(what) + ": header out of range");
    return {static_cast<int>(a), static_cast<int>(b)};
}

}  // namespace

HRep parse_hrep(std::istream& in) {
    LineReader r(in);
    auto [n, m] = parse_header(r, "H-rep");
    HRep h;
    h.n = n;
    for (int i = 0; i < m; ++i) {
        auto toks = r.next_tokens();
        if (static_cast<int>(toks.size()) != n + 1)
            throw ParseError("H-rep row " + std::to_string(i + 1) + ": expected " +
                             std::to_string(n + 1) + " integers");
        HRow row;
        row.normal.resize(n);
        for (int j = 0; j < n; ++j) row.normal[j] = parse_int(toks[j]);
        row.rhs = parse_int(toks[n]);
        h.rows.push_back(std::move(row));
    }
    r.expect_eof();
    return h;
}

void write_hrep(std::ostream& out, const HRep& h) {
    out << h.n << " " << h.rows.size() << "\n";
    for (const HRow& r : h.rows) {
        for (const Int& a : r.normal) out << a.str() << " ";
        out << r.rhs.str() << "\n";
    }
}

VRep parse_vrep(std::istream& in) {
    LineReader r(in);
    auto [n, v] = parse_header(r, "V-rep");
    VRep rep;
    rep.n = n;
    for (int i = 0; i < v; ++i) {
        auto toks = r.next_tokens();
        if (static_cast<int>(toks.size()) != n)
            throw ParseError("V-rep point " + std::to_string(i + 1) + ": expected " +
                             std::to_string(n) + " rationals");
        QVec p(n);
        for (int j = 0; j < n; ++j) p[j] = parse_rational(toks[j]);
        rep.vertices.push_back(std::move(p));
    }
    r.expect_eof();
    rep.box_k = lattice_box_k(rep.vertices);
    return rep;
}

void write_vrep(std::ostream& out, const VRep& v) {
    out << v.n << " " << v.vertices.size() << "\n";
    for (const QVec& p : v.vertices) {
        for (int j = 0; j < v.n; ++j) out << to_string(p[j]) << (j + 1 == v.n ? "" : " ");
        out << "\n";
    }
}

Objective parse_objective(std::istream& in) {
    LineReader r(in);
    auto [n, p] = parse_header(r, "objective");
    auto read_vec = [&]() {
        auto toks = r.next_tokens();
        if (static_cast<int>(toks.size()) != n)
            throw ParseError("objective: expected " + std::to_string(n) + " rationals per line");
        QVec v(n);
        for (int j = 0; j < n; ++j) v[j] = parse_rational(toks[j]);
        return v;
    };
    Objective o;
    o.primary = read_vec();
    for (int i = 0; i < p; ++i) o.perturbations.push_back(read_vec());
    r.expect_eof();
    return o;
}

void write_objective(std::ostream& out, const Objective& o) {
    out << o.n() << " " << o.perturbations.size() << "\n";
    auto emit = [&](const QVec& v) {
        for (int j = 0; j < static_cast<int>(v.size()); ++j)
            out << to_string(v[j]) << (j + 1 == static_cast<int>(v.size()) ? "" : " ");
        out << "\n";
    };
    emit(o.primary);
    for (const QVec& p : o.perturbations) emit(p);
}

SignedPermutation parse_sigma(std::istream& in) {
    LineReader r(in);
    auto toks = r.next_tokens();
    SignedPermutation s;
    for (const std::string& t : toks) s.sigma.push_back(static_cast<int>(parse_int(t)));
    r.expect_eof();
    if (!s.valid()) throw ParseError("not a signed permutation");
    return s;
}

void write_sigma(std::ostream& out, const SignedPermutation& s) {
    for (int i = 0; i < s.n(); ++i) out << s.sigma[i] << (i + 1 == s.n() ? "" : " ");
    out << "\n";
}

namespace {

template <typename T, typename F>
T read_via(const std::string& path, F parse) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    return parse(in);
}

template <typename T, typename F>
void write_via(const std::string& path, const T& value, F write) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    write(out, value);
}

}  // namespace

HRep read_hrep_file(const std::string& path) {
    return read_via<HRep>(path, [](std::istream& in) { return parse_hrep(in); });
}
void write_hrep_file(const std::string& path, const HRep& h) {
    write_via(path, h, [](std::ostream& o, const HRep& v) { write_hrep(o, v); });
}
VRep read_vrep_file(const std::string& path) {
    return read_via<VRep>(path, [](std::istream& in) { return parse_vrep(in); });
}
void write_vrep_file(const std::string& path, const VRep& v) {
    write_via(path, v, [](std::ostream& o, const VRep& x) { write_vrep(o, x); });
}
Objective read_objective_file(const std::string& path) {
    return read_via<Objective>(path, [](std::istream& in) { return parse_objective(in); });
}
void write_objective_file(const std::string& path, const Objective& o) {
    write_via(path, o, [](std::ostream& s, const Objective& x) { write_objective(s, x); });
}
SignedPermutation read_sigma_file(const std::string& path) {
    return read_via<SignedPermutation>(path, [](std::istream& in) { return parse_sigma(in); });
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

}  // namespace latpath
