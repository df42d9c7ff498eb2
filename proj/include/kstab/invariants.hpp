// Valuative invariants of toric pairs and the explicit stability thresholds.

#pragma once

#include "kstab/piecewise.hpp"
#include "kstab/toric.hpp"

#include <optional>
#include <string>

namespace kstab::invariants {

using toric::PolarizedToricPair;
using toric::TDivisor;

enum class Verdict { Uniform, Semistable, Inconclusive, NotApplicable };
std::string to_string(Verdict v);

/// m(v) = min over P of <u, v>.
Rational min_pairing(const PolarizedToricPair& x, const Vec& v);

/// x -> vol_X(L - x F_v) = n! vol(P cap { <u,v> >= m(v) + x }).
ratgeom::PiecewisePolynomial vol_curve(const PolarizedToricPair& x, const Vec& v);

/// S(v) = <barycenter(P), v> - m(v).
Rational s_value_closed(const PolarizedToricPair& x, const Vec& v);

/// S(v) as the integral of vol_curve over (L^n). Throws std::logic_error if it
/// disagrees with the closed form.
Rational s_value(const PolarizedToricPair& x, const Vec& v);

/// S(v) from lattice sums: sum over kP of (<u,v> - k m(v)) is a polynomial in
/// k along multiples of the vertex denominator; its top coefficient over the
/// top coefficient of the point count is S(v).
Rational s_value_ehrhart(const PolarizedToricPair& x, const Vec& v);

/// 1 - S(v) / A(v). Throws DomainError when A(v) <= 0.
Rational beta_hat(const PolarizedToricPair& x, const Vec& v);

struct ValuativeRecord {
    Vec v;
    Rational A, S, beta_hat, ratio;
};

ValuativeRecord valuative_record(const PolarizedToricPair& x, const Vec& v);

struct DeltaResult {
    Rational delta;
    std::size_t argmin = 0;
    Vec ray;
    std::vector<ValuativeRecord> records;  // one per ray
    /// L is linearly equivalent to -(K + Delta).
    bool anticanonical = false;
};

/// min over rays of A(v_rho) / S(v_rho). Throws DomainError for non-klt pairs.
DeltaResult delta_toric(const PolarizedToricPair& x);

/// L + K + Delta is principal.
bool is_anticanonical(const PolarizedToricPair& x);

/// delta / (n + 1).
Rational alpha_lower_bound(const Rational& delta, int n);

/// eps0 = (delta - delta0) / (n delta + n + 1), needs 0 < delta0 < delta.
Rational fano_perturb_nef_radius(const Rational& delta, const Rational& delta0, int n);

/// eps = (delta - 1) / (n delta + n + 1), needs delta > 1.
Rational fano_boundary_radius(const Rational& delta, int n);

struct RootBound {
    Rational lower;  // lower <= eps1
    Rational upper;  // eps1 <= upper, upper - lower < 2^-precision
    bool exact = false;
};

/// eps1 = min{ delta/(n+1), 1 - (delta/delta1)^{1/(n+1)} }, needs delta < delta1.
RootBound fano_perturb_upper(const Rational& delta, const Rational& delta1, int n, int precision = 32);

/// (delta - 1) / ((n^2+n+1) delta + n^2 + n - 1), needs delta > 1.
Rational fano_polarization_radius(const Rational& delta, int n);

/// delta1 = (delta_param - 1) / ((n+1) delta_param).
Rational uniform_delta1(const Rational& delta_param, int n);

/// delta1 - n mu from numerical data.
Rational fano_uniform_coefficient(const Rational& delta_param, int n, const Rational& mu);

struct UniformCoefficient {
    Rational delta;        // delta_toric of the pair
    Rational delta_param;
    Rational epsilon;      // (delta - delta_param) / (n delta + n + 1)
    Rational delta1;
    std::optional<Rational> mu;  // mu_N(L - N)
    std::optional<Rational> coefficient;
    bool anticanonical = false;
    bool delta_param_in_range = false;  // 1 < delta_param < delta
    bool n_nef = false;
    bool eps_l_minus_n_nef = false;
    Verdict verdict = Verdict::Inconclusive;
};

/// Toric evaluation of the coefficient delta1 - n mu_N(L - N). Each hypothesis
/// is reported as a flag; the verdict is Inconclusive unless all hold.
UniformCoefficient fano_uniform_coefficient(const PolarizedToricPair& x, const TDivisor& n_div, const Rational& delta_param);

/// Numerical slope data for pairs that are not toric.
struct AbstractSlopeData {
    int n = 0;
    Rational Ln;                 // (L^n)
    Rational LK;                 // (L^{n-1} . (K + Delta))
    std::optional<Rational> LN;  // (L^{n-1} . N)
    bool ample_flag = false;     // (n^2/(n^2-1)) mu L - (K+Delta) ample
    bool nef_flag = false;       // ... nef
    bool k_ample = false;        // K + Delta ample, for the radius check
};

struct CriterionResult {
    Verdict verdict = Verdict::Inconclusive;
    Rational mu;  // mu_{K+Delta}(L)
    std::string reason;
};

/// Ample (resp. nef) test of (n^2/(n^2-1)) mu L - (K+Delta) with mu > 0.
CriterionResult w_criterion(const PolarizedToricPair& x);
CriterionResult w_criterion(const AbstractSlopeData& data);

struct RadiusCheck {
    Verdict verdict = Verdict::Inconclusive;
    Rational mu_n;    // mu_N(M)
    Rational margin;  // 1 - n^2 mu_N(M)
};

/// Here L = M = K + Delta + N, Ln = (M^n), LN = (M^{n-1} . N).
RadiusCheck gt_radius_check(const AbstractSlopeData& data);

}  // namespace kstab::invariants
