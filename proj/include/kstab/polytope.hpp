// Exact rational convex polytopes.
//
// A LatticePolytope carries a V-representation and an H-representation that
// are certified to describe the same set on construction, plus a simplicial
// triangulation of its boundary (full-dimensional case) that the volume,
// barycenter and facet-volume routines consume.

#pragma once

#include "kstab/rational.hpp"

#include <cstddef>
#include <vector>

namespace kstab::ratgeom {

/// The closed half-space { u : <u, normal> >= offset }.
struct Halfspace {
    Vec normal;
    Rational offset;

    bool operator==(const Halfspace&) const = default;
};

class LatticePolytope {
  public:
    /// Convex hull of a nonempty point set. Throws GeometryError on dimension
    /// mismatch or empty input.
    static LatticePolytope hull(std::vector<Vec> points);

    /// Intersection of half-spaces. The caller guarantees boundedness (for
    /// instance, the normals of a complete fan); the result may be empty or
    /// lower-dimensional.
    static LatticePolytope from_halfspaces(int ambient_dim, std::vector<Halfspace> halfspaces);

    static LatticePolytope empty(int ambient_dim);

    int ambient_dim() const { return ambient_dim_; }
    /// Affine dimension; -1 for the empty polytope.
    int dim() const { return dim_; }
    bool is_empty() const { return dim_ < 0; }
    bool is_full_dimensional() const { return dim_ == ambient_dim_; }
    /// Nonempty but not full-dimensional.
    bool is_degenerate() const { return dim_ >= 0 && dim_ < ambient_dim_; }

    /// Extreme points, sorted lexicographically.
    const std::vector<Vec>& vertices() const { return vertices_; }

    /// For a full-dimensional polytope, one entry per facet with a primitive
    /// integer inward normal, sorted lexicographically. For a degenerate
    /// polytope the list starts with pairs of opposite half-spaces cutting out
    /// the affine hull, followed by the relative facets.
    const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }

    std::size_t facet_count() const { return halfspaces_.size(); }

    /// Indices of vertices lying on the given half-space boundary.
    std::vector<std::size_t> vertices_on_facet(std::size_t facet) const;

    bool contains(const Vec& u) const;

    /// k * P for k >= 0.
    LatticePolytope scaled(const Rational& k) const;
    LatticePolytope translated(const Vec& t) const;

    /// Same vertex set.
    bool operator==(const LatticePolytope& other) const {
        return ambient_dim_ == other.ambient_dim_ && vertices_ == other.vertices_;
    }

    // Boundary triangulation (full-dimensional case only). Each simplex lists
    // `ambient_dim()` indices into triangulation_points() and belongs to the
    // facet boundary_facet()[i].
    const std::vector<Vec>& triangulation_points() const { return tri_points_; }
    const std::vector<std::vector<int>>& boundary_simplices() const { return boundary_; }
    const std::vector<std::size_t>& boundary_facet() const { return boundary_facet_; }
    /// A point in the interior, used as the apex of the cone triangulation.
    const Vec& interior_point() const { return interior_; }

  private:
    int ambient_dim_ = 0;
    int dim_ = -1;
    std::vector<Vec> vertices_;
    std::vector<Halfspace> halfspaces_;
    std::vector<Vec> tri_points_;
    std::vector<std::vector<int>> boundary_;
    std::vector<std::size_t> boundary_facet_;
    Vec interior_;

    friend class HullBuilder;
};

/// Exact Euclidean volume; 0 for empty or degenerate polytopes.
Rational volume(const LatticePolytope& p);

/// Centroid with respect to Lebesgue measure. Throws GeometryError unless p
/// is full-dimensional.
Vec barycenter(const LatticePolytope& p);

/// Integral of a linear form over p, exactly.
Rational integrate_linear(const LatticePolytope& p, const Vec& form);

/// Lattice-normalized (n-1)-volume of a facet: a fundamental cell of the
/// lattice in the facet hyperplane has volume 1.
Rational facet_lattice_volume(const LatticePolytope& p, std::size_t facet);

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

/// Mixed volume V(P_1, ..., P_n), normalized so that V(P, ..., P) = vol(P).
/// Evaluated through the polarization formula over Minkowski sums.
Rational mixed_volume(const std::vector<LatticePolytope>& bodies);

/// P intersected with { u : <u, v> >= c }.
LatticePolytope slice(const LatticePolytope& p, const Vec& v, const Rational& c);

enum class Sense { Minimize, Maximize };

struct LpResult {
    Rational value;
    Vec point;
};

/// Optimizes a linear objective over p by scanning its vertices. Throws
/// GeometryError when p is empty.
LpResult lp_optimize(const Vec& objective, const LatticePolytope& p, Sense sense);

/// max <u,v> - min <u,v> over p.
Rational width(const LatticePolytope& p, const Vec& v);

/// Least common multiple of all vertex coordinate denominators.
Integer vertex_denominator(const LatticePolytope& p);

}  // namespace kstab::ratgeom
