#include "latpath/rational.hpp"

namespace latpath {

std::string to_string(const Rat& r) { return r.str(); }

std::string to_string(const QVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

Int parse_int(const std::string& tok) {
    std::size_t start = 0;
    if (!tok.empty() && (tok[0] == '+' || tok[0] == '-')) start = 1;
    if (!all_digits(tok, start, tok.size()))
        throw ParseError("expected an integer, got \"" + tok + "\"");
    Int v(tok.substr(start));
    return tok[0] == '-' ? Int(-v) : v;
}

Rat parse_rational(const std::string& tok) {
    std::size_t slash = tok.find('/');
    if (slash == std::string::npos) return Rat(parse_int(tok));
    Int n = parse_int(tok.substr(0, slash));
    std::string dpart = tok.substr(slash + 1);
    if (!all_digits(dpart, 0, dpart.size()))
        throw ParseError("expected a rational p/q, got \"" + tok + "\"");
    Int d(dpart);
    if (d == 0) throw ParseError("zero denominator in \"" + tok + "\"");
    return Rat(n, d);  // the two-integer ctor canonicalizes
}

}  // namespace latpath
