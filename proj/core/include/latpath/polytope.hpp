#pragma once

#include <boost/dynamic_bitset.hpp>

#include <optional>

#include "latpath/linalg.hpp"
#include "latpath/rational.hpp"

// Exact representations of polytopes at desk scale. A Polytope always
// carries a cross-validated pair of descriptions:
//
//   H-rep:  integral rows  normal . x <= rhs,  canonicalized (content 1,
//           outward, lexicographically sorted, irredundant),
//   V-rep:  the exact vertex list, lexicographically sorted.
//
// Vertex indices used everywhere else in the library (edge graphs, path
// traces, oracles) refer to the canonical V-rep order. Non-full-dimensional
// polytopes are supported; their H-reps carry the affine hull as pairs of
// opposite inequality rows.

namespace latpath {

struct HRow {
    IVec normal;
    Int rhs;
};

int cmp(const HRow& a, const HRow& b);

/// Build the canonical integral row for normal.x <= rhs: clear denominators
/// jointly, then divide out the content of (normal, rhs). For hyperplanes
/// spanned by lattice points this yields a primitive normal with integral rhs.
HRow canonical_row(const QVec& normal, const Rat& rhs);

struct HRep {
    int n = 0;
    std::vector<HRow> rows;

    /// rhs - normal.x; the row is satisfied iff slack >= 0, tight iff == 0.
    Rat slack(int row, const QVec& x) const;
    bool feasible(const QVec& x) const;
};

/// Smallest integer box [0,k]^n containing the points, when all coordinates
/// are nonnegative integers; nullopt otherwise.
std::optional<Int> lattice_box_k(const std::vector<QVec>& vertices);

struct VRep {
    int n = 0;
    std::vector<QVec> vertices;
    std::optional<Int> box_k;  // lattice box parameter, absent for non-lattice sets
};

/// A face given by H-rep row indices forced to equality.
struct FaceSpec {
    std::vector<int> equality_rows;  // sorted, unique
};

class Polytope {
  public:
    const HRep& hrep() const { return hrep_; }
    const VRep& vrep() const { return vrep_; }
    int n() const { return hrep_.n; }
    int dim() const { return dim_; }
    int num_vertices() const { return static_cast<int>(vrep_.vertices.size()); }
    const QVec& vertex(int i) const { return vrep_.vertices[i]; }
    const std::vector<QVec>& vertices() const { return vrep_.vertices; }

    /// Rows tight at vertex v, as a bitset over row indices.
    const boost::dynamic_bitset<>& tight_rows(int v) const { return tight_[v]; }
    bool row_tight_at(int row, int v) const { return tight_[v].test(row); }

    /// Indices of vertices on which every row of f is tight (may be empty).
    std::vector<int> face_vertex_indices(const FaceSpec& f) const;

    /// All rows tight on every listed vertex: the canonical FaceSpec of the
    /// face spanned by the given vertices.
    FaceSpec face_spec_of(const std::vector<int>& vertex_ids) const;

    /// Index of an exact coordinate match, or -1.
    int vertex_index(const QVec& x) const;

    /// RREF basis of the direction space span{v_i - v_0} (dim rows).
    const QMat& direction_basis() const { return dir_basis_; }

    /// Canonicalize + enumerate vertices from an integral H-rep.
    /// Throws GeometryError on unbounded or empty input.
    static Polytope from_hrep(HRep h);

    /// Convex hull of a rational point set (brute-force facet enumeration).
    /// Requires affine dimension >= 1 at desk scale.
    static Polytope from_points(std::vector<QVec> points);

    /// Adopt a known-good pair of descriptions (used by the generators for
    /// product families); validates everything except global completeness
    /// of the vertex list, which the families guarantee by construction.
    static Polytope from_reps(HRep h, std::vector<QVec> vertices);

  private:
    Polytope() = default;
    void finalize_and_validate();  // sorts, caches tightness, cross-validates

    HRep hrep_;
    VRep vrep_;
    int dim_ = -1;
    QMat dir_basis_;
    std::vector<boost::dynamic_bitset<>> tight_;
};

/// Extreme points of {x : h}. Unbounded input throws GeometryError
/// ("unbounded"); an empty feasible set yields an empty VRep.
VRep enumerate_vertices(const HRep& h);

/// Convex hull via brute force over dim-subsets spanning hyperplanes of the
/// affine hull. Fewer than two distinct points -> GeometryError.
Polytope facet_enumeration(const std::vector<QVec>& points);

/// The sub-polytope {x in p : equality rows tight}, rebuilt canonically with
/// its own H-rep and dimension. Empty face -> GeometryError.
Polytope face_of(const Polytope& p, const FaceSpec& f);

}  // namespace latpath
