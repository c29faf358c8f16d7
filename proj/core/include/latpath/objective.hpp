#pragma once

#include "latpath/rational.hpp"
#include "latpath/rng.hpp"

// Objectives with symbolic lexicographic perturbation, signed permutations
// and the alpha-power weight vectors that induce lexicographic orders on
// lattice boxes.

namespace latpath {

/// A primary vector plus an ordered list of perturbation vectors. The value
/// of x is the tuple (c.x, p1.x, p2.x, ...) compared lexicographically;
/// "u improves on v" means tuple(u) > tuple(v) strictly.
struct Objective {
    QVec primary;
    std::vector<QVec> perturbations;

    int n() const { return static_cast<int>(primary.size()); }
    QVec value_tuple(const QVec& x) const;
};

/// Lexicographic comparison of value tuples: -1, 0 or 1.
int objective_compare(const Objective& o, const QVec& u, const QVec& v);

/// True when the perturbed order separates every pair of the given points.
bool is_total_on(const Objective& o, const std::vector<QVec>& points);

/// The alpha-power vector (alpha, alpha^2, ..., alpha^n) with alpha chosen
/// from the point set's denominator-cleared coordinate range, guaranteeing a
/// total order on the set. Appending it as the last perturbation makes any
/// objective generic for these points.
QVec default_tiebreak(const std::vector<QVec>& points);

/// Copy of c with default_tiebreak(points) appended.
Objective with_tiebreak(Objective c, const std::vector<QVec>& points);

/// sigma: [n] -> +-[n] with |sigma| a permutation. Stored 0-based: entry i
/// holds sigma(i+1) as a signed 1-based value.
struct SignedPermutation {
    std::vector<int> sigma;

    int n() const { return static_cast<int>(sigma.size()); }
    bool valid() const;
    /// Signed value of sigma(i) for 1-based i.
    int image(int i) const { return sigma[i - 1]; }
    /// Signed j with sigma(|j|) = +-i, following the x_{-i} = -x_i convention.
    int preimage(int i) const;

    static SignedPermutation identity(int n);
};

std::vector<SignedPermutation> all_signed_permutations(int n);
SignedPermutation random_signed_permutation(int n, Xorshift64Star& rng);

/// Coordinate i gets sign(sigma(i)) * alpha^|sigma(i)|. Requires
/// alpha >= 2k+1, the hypothesis under which the induced order on lattice
/// points of [-k,k]^n is lexicographic.
QVec build_x_sigma(const SignedPermutation& sigma, const Int& k, const Int& alpha);

/// The combinatorial lexicographic order on integer points: scan positions
/// n..1 through sigma's preimages with signs folded in; the first position
/// where the points differ decides.
int lex_compare(const SignedPermutation& sigma, const IVec& x, const IVec& y);

}  // namespace latpath
