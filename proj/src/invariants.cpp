#include "kstab/invariants.hpp"

#include "kstab/kernels.hpp"
#include "kstab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace kstab::invariants {

using ratgeom::PiecewisePolynomial;
using ratgeom::Polynomial;

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Uniform: return "uniform";
        case Verdict::Semistable: return "semistable";
        case Verdict::Inconclusive: return "inconclusive";
        case Verdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

namespace {

void check_valuation(const PolarizedToricPair& x, const Vec& v) {
    if (static_cast<int>(v.size()) != x.n()) throw DomainError("valuation of wrong dimension");
    if (is_zero(v)) throw DomainError("valuation must be nonzero");
}

Rational top_volume(const PolarizedToricPair& x) { return Rational(factorial(x.n())) * ratgeom::volume(x.polytope()); }

}  // namespace

Rational min_pairing(const PolarizedToricPair& x, const Vec& v) {
    return ratgeom::lp_optimize(v, x.polytope(), ratgeom::Sense::Minimize).value;
}

PiecewisePolynomial vol_curve(const PolarizedToricPair& x, const Vec& v) {
    check_valuation(x, v);
    const Rational m = min_pairing(x, v);
    std::vector<Rational> breaks;
    for (const auto& w : x.polytope().vertices()) breaks.push_back(dot(w, v) - m);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    const int n = x.n();
    const Rational nf(factorial(n));
    std::vector<Polynomial> polys;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        std::vector<Rational> xs, ys;
        for (int j = 0; j <= n; ++j) {
            Rational t = breaks[i] + (breaks[i + 1] - breaks[i]) * frac(j, n);
            xs.push_back(t);
            ys.push_back(nf * ratgeom::volume(ratgeom::slice(x.polytope(), v, m + t)));
        }
        polys.push_back(Polynomial::interpolate(xs, ys));
    }
    return PiecewisePolynomial(std::move(breaks), std::move(polys));
}

Rational s_value_closed(const PolarizedToricPair& x, const Vec& v) {
    check_valuation(x, v);
    return dot(ratgeom::barycenter(x.polytope()), v) - min_pairing(x, v);
}

Rational s_value(const PolarizedToricPair& x, const Vec& v) {
    Rational s = vol_curve(x, v).integral() / top_volume(x);
    if (s != s_value_closed(x, v)) throw std::logic_error("S-value mismatch between volume integral and barycenter");
    return s;
}

Rational s_value_ehrhart(const PolarizedToricPair& x, const Vec& v) {
    check_valuation(x, v);
    const int n = x.n();
    const Integer den = common_denominator(v);
    IntVec w;
    for (const auto& c : v) w.push_back(Rational(c * den).get_num().get_si());
    const Rational m = min_pairing(x, v);
    const Integer d = ratgeom::vertex_denominator(x.polytope());
    std::vector<Rational> js, sums, counts;
    for (long j = 1; j <= n + 3; ++j) {
        Rational k = Rational(d) * j;
        Integer count = kernels::count_lattice_points(x.polytope(), k);
        Rational lin = Rational(kernels::sum_linear(x.polytope(), k, w)) / Rational(den);
        js.emplace_back(j);
        sums.push_back(lin - k * m * Rational(count));
        counts.emplace_back(count);
    }
    auto ps = Polynomial::interpolate(js, sums);
    auto pc = Polynomial::interpolate(js, counts);
    if (ps.degree() != n + 1 || pc.degree() != n) throw std::logic_error("lattice sums are not polynomial along the dilation");
    // top coefficients: S vol(P) d^{n+1} and vol(P) d^n
    return ps.coeffs().back() / (pc.coeffs().back() * Rational(d));
}

Rational beta_hat(const PolarizedToricPair& x, const Vec& v) {
    Rational a = toric::log_discrepancy(x, v);
    if (a <= 0) throw DomainError("beta_hat needs A(v) > 0");
    return 1 - s_value(x, v) / a;
}

ValuativeRecord valuative_record(const PolarizedToricPair& x, const Vec& v) {
    ValuativeRecord r;
    r.v = v;
    r.A = toric::log_discrepancy(x, v);
    r.S = s_value(x, v);
    if (r.A > 0) {
        r.beta_hat = 1 - r.S / r.A;
        r.ratio = r.A / r.S;
    }
    return r;
}

bool is_anticanonical(const PolarizedToricPair& x) {
    auto d = x.L() + toric::canonical_divisor(x) + x.boundary_divisor();
    linalg::Matrix rows;
    for (std::size_t i = 0; i < x.ray_count(); ++i) rows.push_back(x.ray(i));
    return linalg::solve_any(rows, d.coeffs).has_value();
}

DeltaResult delta_toric(const PolarizedToricPair& x) {
    if (!x.is_klt()) throw DomainError("delta_toric needs a klt pair (all boundary coefficients below 1)");
    DeltaResult out;
    for (std::size_t i = 0; i < x.ray_count(); ++i) {
        auto rec = valuative_record(x, x.ray(i));
        if (rec.S <= 0) throw GeometryError("S(v) must be positive at every ray");
        if (i == 0 || rec.ratio < out.delta) {
            out.delta = rec.ratio;
            out.argmin = i;
        }
        out.records.push_back(std::move(rec));
    }
    out.ray = x.ray(out.argmin);
    out.anticanonical = is_anticanonical(x);
    return out;
}

Rational alpha_lower_bound(const Rational& delta, int n) {
    if (delta <= 0) throw DomainError("alpha bound needs delta > 0");
    return delta / (n + 1);
}

Rational fano_perturb_nef_radius(const Rational& delta, const Rational& delta0, int n) {
    if (delta0 <= 0 || delta0 >= delta) throw DomainError("need 0 < delta0 < delta");
    return (delta - delta0) / (n * delta + n + 1);
}

Rational fano_boundary_radius(const Rational& delta, int n) {
    if (delta <= 1) throw DomainError("need delta > 1");
    return (delta - 1) / (n * delta + n + 1);
}

namespace {

// Exact integer k-th root of z >= 0 if it exists.
std::optional<Integer> exact_root(const Integer& z, unsigned long k) {
    Integer r;
    if (mpz_root(r.get_mpz_t(), z.get_mpz_t(), k) != 0) return r;
    return std::nullopt;
}

Rational power(const Rational& q, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= q;
    return r;
}

}  // namespace

RootBound fano_perturb_upper(const Rational& delta, const Rational& delta1, int n, int precision) {
    if (delta <= 0 || delta >= delta1) throw DomainError("need 0 < delta < delta1");
    if (precision < 1 || precision > 4096) throw DomainError("precision must lie in [1, 4096]");
    const int k = n + 1;
    const Rational first = delta / k;
    const Rational r = delta / delta1;
    RootBound out;
    auto num = exact_root(r.get_num(), static_cast<unsigned long>(k));
    auto den = exact_root(r.get_den(), static_cast<unsigned long>(k));
    if (num && den) {
        Rational second = 1 - Rational(*num) / Rational(*den);
        second.canonicalize();
        out.lower = out.upper = std::min(first, second);
        out.exact = true;
        return out;
    }
    // root lies in (0, 1); bisect on dyadic rationals
    Rational lo = 0, hi = 1;
    const Rational width = Rational(1) / Rational(Integer(1) << precision);
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        if (power(mid, k) < r)
            lo = mid;
        else
            hi = mid;
    }
    // 1 - hi < 1 - root < 1 - lo
    if (first <= 1 - hi) {
        out.lower = out.upper = first;
        out.exact = true;
    } else {
        out.lower = std::min(first, Rational(1 - hi));
        out.upper = std::min(first, Rational(1 - lo));
    }
    return out;
}

Rational fano_polarization_radius(const Rational& delta, int n) {
    if (delta <= 1) throw DomainError("need delta > 1");
    const int q = n * n + n;
    return (delta - 1) / ((q + 1) * delta + q - 1);
}

Rational uniform_delta1(const Rational& delta_param, int n) {
    if (delta_param <= 0) throw DomainError("need delta_param > 0");
    return (delta_param - 1) / ((n + 1) * delta_param);
}

Rational fano_uniform_coefficient(const Rational& delta_param, int n, const Rational& mu) {
    return uniform_delta1(delta_param, n) - n * mu;
}

namespace {

Verdict sign_verdict(const Rational& c) {
    if (c > 0) return Verdict::Uniform;
    if (c == 0) return Verdict::Semistable;
    return Verdict::Inconclusive;
}

}  // namespace

UniformCoefficient fano_uniform_coefficient(const PolarizedToricPair& x, const TDivisor& n_div, const Rational& delta_param) {
    UniformCoefficient out;
    const int n = x.n();
    auto dt = delta_toric(x);
    out.delta = dt.delta;
    out.delta_param = delta_param;
    out.anticanonical = dt.anticanonical;
    out.delta_param_in_range = delta_param > 1 && delta_param < dt.delta;
    out.epsilon = (dt.delta - delta_param) / (n * dt.delta + n + 1);
    out.delta1 = uniform_delta1(delta_param, n);
    out.n_nef = toric::is_nef(x, n_div);
    out.eps_l_minus_n_nef = toric::is_nef(x, out.epsilon * x.L() - n_div);
    auto m = x.L() - n_div;
    std::vector<TDivisor> top(static_cast<std::size_t>(n), m);
    Rational mn = toric::intersection_number(x, top);
    if (mn > 0) {
        top.back() = n_div;
        out.mu = toric::intersection_number(x, top) / mn;
        out.coefficient = out.delta1 - n * *out.mu;
    }
    const bool hypotheses = out.anticanonical && out.delta_param_in_range && out.n_nef && out.eps_l_minus_n_nef && out.coefficient;
    out.verdict = hypotheses ? sign_verdict(*out.coefficient) : Verdict::Inconclusive;
    return out;
}

namespace {

CriterionResult apply_rule(int n, const Rational& mu, bool ample, bool nef) {
    if (n < 2) throw DomainError("criterion needs n >= 2; curves are handled separately");
    CriterionResult r;
    r.mu = mu;
    if (mu <= 0) {
        r.verdict = Verdict::Inconclusive;
        r.reason = "mu_{K+Delta}(L) <= 0";
    } else if (ample) {
        r.verdict = Verdict::Uniform;
        r.reason = "ample branch holds";
    } else if (nef) {
        r.verdict = Verdict::Semistable;
        r.reason = "nef branch holds";
    } else {
        r.verdict = Verdict::Inconclusive;
        r.reason = "neither ample nor nef";
    }
    return r;
}

}  // namespace

CriterionResult w_criterion(const PolarizedToricPair& x) {
    const int n = x.n();
    auto kd = toric::canonical_divisor(x) + x.boundary_divisor();
    Rational mu = toric::slope(x, kd, x.L());
    bool ample = false, nef = false;
    if (mu > 0 && n >= 2) {
        auto test = (Rational(n * n) / (n * n - 1) * mu) * x.L() - kd;
        ample = toric::is_ample(x, test);
        nef = toric::is_nef(x, test);
    }
    return apply_rule(n, mu, ample, nef);
}

CriterionResult w_criterion(const AbstractSlopeData& data) {
    if (data.Ln <= 0) throw DomainError("(L^n) must be positive");
    return apply_rule(data.n, data.LK / data.Ln, data.ample_flag, data.nef_flag);
}

RadiusCheck gt_radius_check(const AbstractSlopeData& data) {
    if (!data.LN) throw DomainError("radius check needs (M^{n-1} . N)");
    if (data.Ln <= 0) throw DomainError("(M^n) must be positive");
    RadiusCheck r;
    r.mu_n = *data.LN / data.Ln;
    r.margin = 1 - data.n * data.n * r.mu_n;
    if (!data.k_ample)
        r.verdict = Verdict::NotApplicable;
    else
        r.verdict = r.margin > 0 ? Verdict::Uniform : Verdict::Inconclusive;
    return r;
}

}  // namespace kstab::invariants
