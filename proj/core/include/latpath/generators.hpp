#pragma once

#include "latpath/polytope.hpp"
#include "latpath/rng.hpp"

// Seeded, reproducible instance generators. The same GenSpec always yields
// the same Polytope bit-for-bit: the PRNG is pinned (xorshift64*, see
// rng.hpp) and hulls are built from drawn lattice points so vertex
// coordinates stay in the family's lattice by construction.

namespace latpath {

enum class Family {
    cube,
    simplex,
    cross_polytope,
    dilated_01_hull,
    lattice_hull,
    half_integral_hull,
    order_polytope,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct GenSpec {
    Family family = Family::cube;
    int n = 1;
    long long k = 1;     // box/dilation parameter where meaningful
    int points = 0;      // draw count for hull families
    bool shifted = false;  // cross_polytope: translate by (1,...,1) into [0,2]^n
    std::uint64_t seed = 0;

    /// Single-line key=value form, e.g. "family=cube,n=3,k=1,seed=42".
    std::string to_line() const;
    static GenSpec parse_line(const std::string& line);

    /// Filesystem/CSV-safe instance id, e.g. "cube_n3_k1_s42".
    std::string name() const;
};

Polytope generate(const GenSpec& spec);

/// Random transitively closed strict order on {0..n-1} with i < j in index
/// order; each pair is included with probability 1/2. Deterministic per seed.
std::vector<std::pair<int, int>> poset_random(int n, std::uint64_t seed);

/// {0 <= x <= 1, x_i <= x_j for relations}; the antichain gives the cube.
Polytope order_polytope(int n, const std::vector<std::pair<int, int>>& relations);

/// One GenSpec per non-empty line; '#' starts a comment line.
std::vector<GenSpec> parse_manifest(const std::string& text);

}  // namespace latpath
