// Toric test configurations.
//
// A convex PL function f on P with min f = 0 and a ceiling M > max f define
// Q = { (u, t) : u in P, 0 <= t <= M - f(u) }. The toric variety of Q maps to
// P^1 through the last coordinate; facets with negative last normal
// coordinate are the components of the central fiber, and the bottom facet
// t = 0 is a trivially embedded copy of (X, L).

#pragma once

#include "kstab/invariants.hpp"
#include "kstab/kernels.hpp"
#include "kstab/piecewise.hpp"
#include "kstab/toric.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace kstab::testconfig {

using invariants::Verdict;
using ratgeom::PLFunction;
using toric::PolarizedToricPair;
using toric::TDivisor;

enum class FacetKind { Vertical, Bottom, Top };

struct FacetInfo {
    FacetKind kind = FacetKind::Vertical;
    std::size_t ray = 0;    // Vertical: ray of the base fan
    std::size_t piece = 0;  // Top: a piece of f realizing this facet
    Integer multiplicity = 1;  // Top: |last coordinate of the primitive normal|
    Rational lattice_volume;
};

class ToricTestConfig {
  public:
    /// Throws GeometryError for non-convex f or M <= max f. If min f != 0,
    /// f and M are shifted so that min f = 0 and normalized() is set.
    static ToricTestConfig build(const PolarizedToricPair& base, const PLFunction& f, const Rational& ceiling);

    const PolarizedToricPair& base() const { return base_; }
    const PLFunction& f() const { return f_; }
    const Rational& ceiling() const { return ceiling_; }
    const ratgeom::LatticePolytope& Q() const { return q_; }
    const std::vector<FacetInfo>& facets() const { return facets_; }
    bool normalized() const { return shift_ != 0; }
    /// Amount subtracted from f (and M) during normalization.
    const Rational& shift() const { return shift_; }
    /// Same f, another ceiling.
    ToricTestConfig with_ceiling(const Rational& ceiling) const;
    /// Same f and ceiling over a pair with another boundary.
    ToricTestConfig with_base(const PolarizedToricPair& base) const;

  private:
    PolarizedToricPair base_;
    PLFunction f_;
    Rational ceiling_;
    Rational shift_;
    ratgeom::LatticePolytope q_;
    std::vector<FacetInfo> facets_;
};

/// (n+1)! V(Q, P x {0}, ..., P x {0}) / (L^n) - (n+1)! vol(Q) / ((n+1)(L^n)).
Rational jna(const ToricTestConfig& tc);

/// mean_P f - min_P f, integrated over the linearity cells of f.
Rational jna_roof(const ToricTestConfig& tc);

/// DF through the facet formula, with the boundary coefficients of the base.
Rational df(const ToricTestConfig& tc);

/// DF with arbitrary rational boundary coefficients (one per ray).
Rational df(const ToricTestConfig& tc, const Vec& coeffs);

struct OracleResult {
    Rational value;
    Integer step;       // dilations run over k = step * j
    int samples = 0;    // number of j values used
};

/// DF for Delta = 0 from lattice-point weights: with N_k = #(kP) and
/// w_k = sum over kP of floor(k (M - f(u/k))), w_k / (k N_k) = F0 + F1/k + ...
/// and DF = -2 F1. Exact polynomial fits along k = step * j with step the
/// vertex denominator of Q; throws DomainError if k_max is too small.
OracleResult df_weight_oracle(const ToricTestConfig& tc, long k_max = 40, kernels::Exec exec = kernels::Exec::Serial);

bool is_trivial(const ToricTestConfig& tc);

struct PerturbRecord {
    Rational lhs;  // n mu_N(L) J^NA
    Rational rhs;  // DF_{Delta+N} - DF_Delta
    bool holds = false;
    Rational mu;
    Rational jna;
};

/// Throws GeometryError unless N is effective and nef.
PerturbRecord perturb_check(const ToricTestConfig& tc, const TDivisor& n_div);

/// f(u) = max(0, c - (<u,v> - m(v))) with ceiling max f + 1.
ToricTestConfig destabilizer_from_ray(const PolarizedToricPair& x, const Vec& v, const Rational& c);

struct ScanRecord {
    Rational c;
    Rational df;
    Rational jna;
};

/// c = width_v(P) * j / grid for j = 1..grid.
std::vector<ScanRecord> destabilizer_scan(const PolarizedToricPair& x, const Vec& v, int grid = 8);

struct TechnicalRecord {
    Verdict verdict = Verdict::NotApplicable;
    Rational delta;
    Rational epsilon;  // 1 - 1/delta
    Rational df;
    Rational jna;
    Rational bound;    // epsilon / (n+1) * J^NA
    bool holds = true;
};

/// DF >= (1 - 1/delta)/(n+1) J^NA when delta_toric >= 1; NotApplicable
/// otherwise. Throws GeometryError unless L is linearly equivalent to -(K+Delta).
TechnicalRecord technical_bound_check(const ToricTestConfig& tc);

/// phi times the pullback of L plus psi times the pullback of p_1^* L.
struct NefCombo {
    Rational phi;
    Rational psi;
};

/// (M_1 ... M_{n-1} . D^2) on the common refinement of the fans of Q and
/// X x P^1. D maps facet indices of Q to coefficients and must be supported
/// on central-fiber facets; throws GeometryError otherwise or when D is not
/// Q-Cartier.
Rational negativity_check(const ToricTestConfig& tc, const std::vector<std::pair<std::size_t, Rational>>& d, const std::vector<NefCombo>& ms);

}  // namespace kstab::testconfig
