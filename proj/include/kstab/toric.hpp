// Polarized toric pairs ((X, Delta), L) described by a lattice polytope.
//
// Conventions: P = { u : <u, v_rho> >= -d_rho } for L = sum d_rho D_rho; the
// fan is the normal fan of P with rays the primitive inward facet normals and
// one maximal cone per vertex of P.

#pragma once

#include "kstab/polytope.hpp"

#include <vector>

namespace kstab::toric {

using ratgeom::LatticePolytope;

struct Fan {
    int dim = 0;
    std::vector<Vec> rays;
    /// Maximal cones as sorted ray-index lists, one per vertex of P.
    std::vector<std::vector<std::size_t>> cones;

    bool is_simplicial() const;
};

/// Torus-invariant Q-divisor sum coeffs[rho] * D_rho.
struct TDivisor {
    Vec coeffs;

    std::size_t size() const { return coeffs.size(); }
    const Rational& operator[](std::size_t i) const { return coeffs[i]; }
    bool operator==(const TDivisor&) const = default;
};

TDivisor operator+(const TDivisor& a, const TDivisor& b);
TDivisor operator-(const TDivisor& a, const TDivisor& b);
TDivisor operator-(const TDivisor& a);
TDivisor operator*(const Rational& s, const TDivisor& a);
using kstab::operator+;
using kstab::operator-;
using kstab::operator*;

class PolarizedToricPair {
  public:
    /// Pair with polarization given by P. Boundary coefficients follow the
    /// order of P.halfspaces(); empty means Delta = 0.
    static PolarizedToricPair from_polytope(const LatticePolytope& p, Vec boundary = {}, bool require_log_cartier = true);

    /// Pair on the complete fan with the given rays, polarized by
    /// L = sum l_rho D_rho. Rays keep the given order. Throws GeometryError
    /// unless L is ample and (when required) K + Delta is Q-Cartier.
    static PolarizedToricPair from_rays(std::vector<Vec> rays, const Vec& l_coeffs, Vec boundary = {}, bool require_log_cartier = true);

    int n() const { return fan_.dim; }
    const LatticePolytope& polytope() const { return p_; }
    const Fan& fan() const { return fan_; }
    std::size_t ray_count() const { return fan_.rays.size(); }
    const Vec& ray(std::size_t i) const { return fan_.rays[i]; }
    const Vec& boundary() const { return boundary_; }
    const TDivisor& L() const { return l_; }

    /// Index of the ray equal to v; throws GeometryError if absent.
    std::size_t ray_index(const Vec& v) const;
    /// Index of the facet of P with inward normal ray(i).
    std::size_t facet_of_ray(std::size_t i) const { return facet_of_ray_[i]; }

    /// Throws GeometryError if K + Delta is not Q-Cartier.
    PolarizedToricPair with_boundary(Vec boundary) const;
    /// Same fan and boundary, polarized by another ample divisor.
    PolarizedToricPair with_polarization(const TDivisor& l) const;

    TDivisor zero_divisor() const { return TDivisor{zero_vec(static_cast<int>(ray_count()))}; }
    TDivisor prime_divisor(std::size_t i) const;
    /// div(chi^u) = sum <u, v_rho> D_rho.
    TDivisor principal_divisor(const Vec& u) const;
    /// Delta = sum c_rho D_rho.
    TDivisor boundary_divisor() const { return TDivisor{boundary_}; }

    bool is_klt() const;
    bool is_lc() const;

  private:
    LatticePolytope p_;
    Fan fan_;
    Vec boundary_;
    TDivisor l_;
    std::vector<std::size_t> facet_of_ray_;
};

/// m_sigma solving <m, v_rho> = -d_rho for rho in sigma, per maximal cone.
/// Throws GeometryError if D is not Q-Cartier.
std::vector<Vec> cartier_data(const PolarizedToricPair& x, const TDivisor& d);

bool is_nef(const PolarizedToricPair& x, const TDivisor& d);
bool is_ample(const PolarizedToricPair& x, const TDivisor& d);

/// { u : <u, v_rho> >= -d_rho }, possibly empty or degenerate.
LatticePolytope divisor_polytope(const PolarizedToricPair& x, const TDivisor& d);

/// Least m >= 0 with d + m L nef, L the polarization of x.
Rational nef_shift(const PolarizedToricPair& x, const TDivisor& d);

/// (D_1 ... D_n), through mixed volumes of nef divisors and multilinearity.
Rational intersection_number(const PolarizedToricPair& x, const std::vector<TDivisor>& ds);

/// (L^{n-1} . D) for the polarization L of x, as sum d_rho (n-1)! latvol(F_rho).
Rational facet_degree(const PolarizedToricPair& x, const TDivisor& d);

/// -sum D_rho.
TDivisor canonical_divisor(const PolarizedToricPair& x);

/// mu_D(L) = (L^{n-1} . D) / (L^n). Throws GeometryError unless L is ample.
Rational slope(const PolarizedToricPair& x, const TDivisor& d, const TDivisor& l);

/// A_{(X,Delta)}(v): the function on the fan that is linear on each cone and
/// equals 1 - c_rho at v_rho.
Rational log_discrepancy(const PolarizedToricPair& x, const Vec& v);

/// Coordinates s with D = sum s_i a_i + div(chi^u) for some u. Throws
/// DomainError when the basis does not determine them uniquely.
Vec class_coordinates(const PolarizedToricPair& x, const TDivisor& d, const std::vector<TDivisor>& basis);

struct ConeSplit {
    Vec t;               // L = sum t_i a_i
    Rational t0;         // min t_i
    Vec xi;              // xi = sum xi_i a_i
    Rational xi_norm;    // l1 norm of xi in the basis
    Rational minus_scale, plus_scale;  // 1 + xi_norm / t0, 1 - xi_norm / t0
    TDivisor minus_residual, plus_residual;
    Rational minus_norm, plus_norm;
    bool minus_nef = false, plus_nef = false;
};

/// L + xi = minus_scale (L - minus_residual) = plus_scale (L + plus_residual).
ConeSplit cone_split(const PolarizedToricPair& x, const TDivisor& l, const TDivisor& xi, const std::vector<TDivisor>& basis);

/// Largest delta with (1/t0 + 1) delta / (1 - delta/t0) <= eps: eps t0 / (1 + t0 + eps).
Rational cone_radius(const Rational& t0, const Rational& eps);

}  // namespace kstab::toric
