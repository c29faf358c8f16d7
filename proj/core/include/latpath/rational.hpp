#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

// Exact scalar domain. Every quantity in the geometry and pivoting layers is
// an arbitrary-precision rational (GMP-backed); there is no floating point
// anywhere in the library.

namespace latpath {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Malformed file or string input.
struct ParseError : Error {
    using Error::Error;
};
/// Geometric rejection: unbounded H-rep, empty face, degenerate input.
struct GeometryError : Error {
    using Error::Error;
};
/// A documented operation precondition does not hold.
struct PreconditionError : Error {
    using Error::Error;
};
/// An invariant the construction guarantees was observed broken (a bug).
struct InternalError : Error {
    using Error::Error;
};

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

template <typename T>
int cmp(const T& a, const T& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

/// Lexicographic comparison of equal-length vectors.
template <typename V>
int lex_cmp(const V& a, const V& b) {
    if (a.size() != b.size()) throw InternalError("lex_cmp: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

inline Rat dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw InternalError("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const IVec& a, const QVec& b) {
    if (a.size() != b.size()) throw InternalError("dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline Int dot(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw InternalError("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline QVec to_rational(const IVec& a) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
    return r;
}

/// gcd of absolute values of all entries; 0 for the zero vector.
inline Int content(const IVec& a) {
    Int g = 0;
    for (const Int& x : a) g = boost::multiprecision::gcd(g, x);
    return g;
}

/// Divide out the content. The zero vector is returned unchanged.
inline IVec primitive(IVec a) {
    Int g = content(a);
    if (g > 1)
        for (Int& x : a) x /= g;
    return a;
}

inline bool is_integer(const Rat& r) { return den(r) == 1; }

std::string to_string(const Rat& r);
std::string to_string(const QVec& v);

/// Parse "[+-]digits" and nothing else.
Int parse_int(const std::string& tok);

/// Parse "[+-]digits" or "[+-]digits/digits" (positive denominator).
Rat parse_rational(const std::string& tok);

}  // namespace latpath
