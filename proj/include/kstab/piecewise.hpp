// Piecewise-linear functions on polytopes and piecewise-polynomial functions
// of one variable.

#pragma once

#include "kstab/polytope.hpp"

#include <optional>
#include <vector>

namespace kstab::ratgeom {

/// Dense univariate polynomial, coefficients in increasing degree.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    /// Unique polynomial of degree < xs.size() through the given samples.
    static Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

    Rational operator()(const Rational& x) const;
    /// Definite integral over [a, b].
    Rational integrate(const Rational& a, const Rational& b) const;
    int degree() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

  private:
    std::vector<Rational> coeffs_;
};

/// Continuous function of x >= breakpoints.front(), given by polys[i] on
/// [breakpoints[i], breakpoints[i+1]] and identically zero past the last
/// breakpoint.
class PiecewisePolynomial {
  public:
    PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> polys);

    Rational operator()(const Rational& x) const;
    /// Integral from the first breakpoint to infinity.
    Rational integral() const;

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<Polynomial>& polys() const { return polys_; }

  private:
    std::vector<Rational> breakpoints_;
    std::vector<Polynomial> polys_;
};

/// Affine form u -> <slope, u> + offset, optionally declared to be the value
/// of the function on `cell`.
struct AffinePiece {
    Vec slope;
    Rational offset;
    std::optional<LatticePolytope> cell;

    Rational operator()(const Vec& u) const { return dot(slope, u) + offset; }
};

/// Convex piecewise-linear function f(u) = max_i piece_i(u).
class PLFunction {
  public:
    /// Upper envelope of affine pieces. Declared cells are kept for
    /// certification but do not change the function.
    static PLFunction upper_envelope(int dim, std::vector<AffinePiece> pieces);

    /// Lower convex envelope of the lifted points (u_i, z_i). Defined on the
    /// convex hull of the u_i.
    static PLFunction lower_convex_envelope(const std::vector<Vec>& points, const std::vector<Rational>& values);

    static PLFunction constant(int dim, const Rational& c);

    Rational operator()(const Vec& u) const;

    int dim() const { return dim_; }
    const std::vector<AffinePiece>& pieces() const { return pieces_; }

    /// Checks that every declared cell lies in `domain`, that each piece
    /// agrees with the envelope on its declared cell, and that declared cells
    /// tile the domain. Throws GeometryError("non-convex ...") otherwise.
    void certify_convex_on(const LatticePolytope& domain) const;

    /// Full-dimensional maximal linearity cells inside `domain`, paired with
    /// the index of the piece realizing f there. Identical pieces share one cell.
    std::vector<std::pair<std::size_t, LatticePolytope>> linearity_cells(const LatticePolytope& domain) const;

    Rational min_on(const LatticePolytope& domain) const;
    Rational max_on(const LatticePolytope& domain) const;
    /// Exact integral of f over the domain, summed cell by cell.
    Rational integral_over(const LatticePolytope& domain) const;

    PLFunction plus_constant(const Rational& c) const;

  private:
    int dim_ = 0;
    std::vector<AffinePiece> pieces_;
};

}  // namespace kstab::ratgeom
