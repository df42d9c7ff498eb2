#include "kstab/testconfig.hpp"

#include "kstab/linalg.hpp"

#include <stdexcept>

namespace kstab::testconfig {

using ratgeom::AffinePiece;
using ratgeom::Halfspace;
using ratgeom::LatticePolytope;

namespace {

Vec lift(const Vec& u, const Rational& t) {
    Vec w = u;
    w.push_back(t);
    return w;
}

Vec head(const Vec& w) { return Vec(w.begin(), w.end() - 1); }

LatticePolytope base_slab(const LatticePolytope& p) {
    std::vector<Vec> pts;
    for (const auto& v : p.vertices()) pts.push_back(lift(v, 0));
    return LatticePolytope::hull(std::move(pts));
}

std::int64_t to_int64(const Rational& q) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw DomainError("value does not fit the enumeration kernel");
    return q.get_num().get_si();
}

Rational base_volume(const ToricTestConfig& tc) { return ratgeom::volume(tc.base().polytope()); }

}  // namespace

ToricTestConfig ToricTestConfig::build(const PolarizedToricPair& base, const PLFunction& f, const Rational& ceiling) {
    const auto& p = base.polytope();
    const int n = base.n();
    if (f.dim() != n) throw GeometryError("PL function of wrong dimension");
    f.certify_convex_on(p);

    ToricTestConfig tc;
    tc.base_ = base;
    tc.shift_ = f.min_on(p);
    tc.f_ = tc.shift_ == 0 ? f : f.plus_constant(-tc.shift_);
    tc.ceiling_ = ceiling - tc.shift_;
    if (tc.ceiling_ <= tc.f_.max_on(p)) throw GeometryError("ceiling must exceed max f");

    std::vector<Halfspace> hs;
    for (const auto& h : p.halfspaces()) hs.push_back({lift(h.normal, 0), h.offset});
    hs.push_back({lift(zero_vec(n), 1), 0});
    for (const auto& piece : tc.f_.pieces()) hs.push_back({lift(-piece.slope, -1), piece.offset - tc.ceiling_});
    tc.q_ = LatticePolytope::from_halfspaces(n + 1, std::move(hs));
    if (!tc.q_.is_full_dimensional()) throw GeometryError("Q is not full-dimensional");

    std::size_t vertical = 0, bottom = 0;
    for (std::size_t j = 0; j < tc.q_.facet_count(); ++j) {
        const auto& h = tc.q_.halfspaces()[j];
        const Rational last = h.normal.back();
        FacetInfo info;
        info.lattice_volume = ratgeom::facet_lattice_volume(tc.q_, j);
        if (last == 0) {
            info.kind = FacetKind::Vertical;
            info.ray = base.ray_index(head(h.normal));
            ++vertical;
        } else if (last > 0) {
            if (!is_zero(head(h.normal))) throw GeometryError("unexpected facet of Q with positive last coordinate");
            info.kind = FacetKind::Bottom;
            ++bottom;
        } else {
            info.kind = FacetKind::Top;
            info.multiplicity = Rational(-last).get_num();
            const Vec a = (1 / last) * head(h.normal);
            const Rational b = tc.ceiling_ + h.offset / (-last);
            const auto& pieces = tc.f_.pieces();
            std::size_t i = 0;
            while (i < pieces.size() && !(pieces[i].slope == a && pieces[i].offset == b)) ++i;
            if (i == pieces.size()) throw std::logic_error("top facet of Q matches no piece of f");
            info.piece = i;
        }
        tc.facets_.push_back(std::move(info));
    }
    if (vertical != base.ray_count() || bottom != 1) throw GeometryError("facets of Q do not match the base polytope");
    return tc;
}

ToricTestConfig ToricTestConfig::with_ceiling(const Rational& ceiling) const { return build(base_, f_, ceiling); }

ToricTestConfig ToricTestConfig::with_base(const PolarizedToricPair& base) const { return build(base, f_, ceiling_); }

Rational jna(const ToricTestConfig& tc) {
    const int n = tc.base().n();
    std::vector<LatticePolytope> bodies(static_cast<std::size_t>(n), base_slab(tc.base().polytope()));
    bodies.insert(bodies.begin(), tc.Q());
    const Rational vp = base_volume(tc);
    return Rational(n + 1) * ratgeom::mixed_volume(bodies) / vp - ratgeom::volume(tc.Q()) / vp;
}

Rational jna_roof(const ToricTestConfig& tc) {
    const auto& p = tc.base().polytope();
    return tc.f().integral_over(p) / ratgeom::volume(p) - tc.f().min_on(p);
}

Rational df(const ToricTestConfig& tc) { return df(tc, tc.base().boundary()); }

Rational df(const ToricTestConfig& tc, const Vec& coeffs) {
    const auto& x = tc.base();
    const int n = x.n();
    if (coeffs.size() != x.ray_count()) throw DomainError("df needs one boundary coefficient per ray");
    Rational fiber_sum = 0;
    for (const auto& info : tc.facets()) {
        if (info.kind == FacetKind::Vertical)
            fiber_sum += (coeffs[info.ray] - 1) * info.lattice_volume;
        else if (info.kind == FacetKind::Top)
            fiber_sum += Rational(info.multiplicity - 1) * info.lattice_volume;
    }
    const Rational v = Rational(factorial(n)) * base_volume(tc);
    TDivisor kd = x.zero_divisor();
    for (std::size_t i = 0; i < coeffs.size(); ++i) kd.coeffs[i] = coeffs[i] - 1;
    const Rational mu = toric::facet_degree(x, kd) / v;
    const Rational top = Rational(factorial(n + 1)) * ratgeom::volume(tc.Q());
    return (Rational(factorial(n)) * fiber_sum - frac(n, n + 1) * mu * top) / v;
}

OracleResult df_weight_oracle(const ToricTestConfig& tc, long k_max, kernels::Exec exec) {
    const auto& x = tc.base();
    const int n = x.n();
    for (const auto& c : x.boundary())
        if (c != 0) throw DomainError("weight oracle needs Delta = 0");

    Integer den = tc.ceiling().get_den();
    for (const auto& piece : tc.f().pieces()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), common_denominator(piece.slope).get_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), piece.offset.get_den_mpz_t());
    }
    const Rational dq(den);
    kernels::RoofData roof;
    roof.denom = to_int64(dq);
    roof.ceiling = to_int64(tc.ceiling() * dq);
    for (const auto& piece : tc.f().pieces()) {
        IntVec s;
        for (const auto& a : piece.slope) s.push_back(to_int64(a * dq));
        roof.slopes.push_back(std::move(s));
        roof.offsets.push_back(to_int64(piece.offset * dq));
    }

    OracleResult out;
    out.step = ratgeom::vertex_denominator(tc.Q());
    out.samples = n + 3;
    if (Rational(out.step) * out.samples > k_max) throw DomainError("k_max too small for the weight fit");
    const long step = out.step.get_si();

    std::vector<Rational> js, ws, ns;
    for (long j = 1; j <= out.samples; ++j) {
        const long k = step * j;
        js.emplace_back(j);
        ws.emplace_back(kernels::roof_weight(x.polytope(), k, roof, exec));
        ns.emplace_back(kernels::count_lattice_points(x.polytope(), Rational(k), exec));
    }
    auto pw = ratgeom::Polynomial::interpolate(js, ws);
    auto pn = ratgeom::Polynomial::interpolate(js, ns);
    if (pw.degree() != n + 1 || pn.degree() != n) throw std::logic_error("weights are not polynomial along the dilation");
    auto in_k = [&](const ratgeom::Polynomial& poly, int i) {
        Rational scale = 1;
        for (int e = 0; e < i; ++e) scale *= Rational(out.step);
        return i < static_cast<int>(poly.coeffs().size()) ? poly.coeffs()[i] / scale : Rational(0);
    };
    const Rational w1 = in_k(pw, n + 1), w0 = in_k(pw, n);
    const Rational n1 = in_k(pn, n), n0 = in_k(pn, n - 1);
    const Rational f1 = w0 / n1 - w1 * n0 / (n1 * n1);
    out.value = -2 * f1;
    return out;
}

bool is_trivial(const ToricTestConfig& tc) {
    const auto& p = tc.base().polytope();
    return tc.f().max_on(p) == tc.f().min_on(p);
}

PerturbRecord perturb_check(const ToricTestConfig& tc, const TDivisor& n_div) {
    const auto& x = tc.base();
    if (n_div.size() != x.ray_count()) throw DomainError("N needs one coefficient per ray");
    for (const auto& c : n_div.coeffs)
        if (c < 0) throw GeometryError("N is not effective");
    if (!toric::is_nef(x, n_div)) throw GeometryError("N is not nef");
    PerturbRecord r;
    r.mu = toric::facet_degree(x, n_div) / (Rational(factorial(x.n())) * base_volume(tc));
    r.jna = jna(tc);
    r.lhs = Rational(x.n()) * r.mu * r.jna;
    r.rhs = df(tc, x.boundary() + n_div.coeffs) - df(tc);
    r.holds = r.lhs >= r.rhs;
    return r;
}

ToricTestConfig destabilizer_from_ray(const PolarizedToricPair& x, const Vec& v, const Rational& c) {
    if (c <= 0) throw DomainError("destabilizer needs c > 0");
    if (static_cast<int>(v.size()) != x.n() || is_zero(v)) throw DomainError("destabilizer needs a nonzero vector of the fan dimension");
    const Rational m = invariants::min_pairing(x, v);
    std::vector<AffinePiece> pieces;
    pieces.push_back({zero_vec(x.n()), 0, std::nullopt});
    pieces.push_back({-v, c + m, std::nullopt});
    auto f = PLFunction::upper_envelope(x.n(), std::move(pieces));
    return ToricTestConfig::build(x, f, f.max_on(x.polytope()) + 1);
}

std::vector<ScanRecord> destabilizer_scan(const PolarizedToricPair& x, const Vec& v, int grid) {
    if (grid < 1) throw DomainError("grid must be positive");
    const Rational w = ratgeom::width(x.polytope(), v);
    std::vector<ScanRecord> out;
    for (int j = 1; j <= grid; ++j) {
        const Rational c = w * frac(j, grid);
        auto tc = destabilizer_from_ray(x, v, c);
        out.push_back({c, df(tc), jna(tc)});
    }
    return out;
}

TechnicalRecord technical_bound_check(const ToricTestConfig& tc) {
    const auto& x = tc.base();
    if (!invariants::is_anticanonical(x)) throw GeometryError("technical bound needs L = -(K + Delta)");
    TechnicalRecord r;
    r.delta = invariants::delta_toric(x).delta;
    r.df = df(tc);
    r.jna = jna(tc);
    if (r.delta < 1) return r;
    r.epsilon = 1 - 1 / r.delta;
    r.bound = r.epsilon / (x.n() + 1) * r.jna;
    r.holds = r.df >= r.bound;
    if (!r.holds)
        r.verdict = Verdict::Inconclusive;
    else
        r.verdict = r.epsilon > 0 ? Verdict::Uniform : Verdict::Semistable;
    return r;
}

Rational negativity_check(const ToricTestConfig& tc, const std::vector<std::pair<std::size_t, Rational>>& d, const std::vector<NefCombo>& ms) {
    const int n = tc.base().n();
    if (static_cast<int>(ms.size()) != n - 1) throw DomainError("negativity check needs n - 1 nef classes");
    const auto& q = tc.Q();
    auto xq = PolarizedToricPair::from_polytope(q, {}, false);
    TDivisor dq = xq.zero_divisor();
    for (const auto& [facet, coeff] : d) {
        if (facet >= tc.facets().size()) throw DomainError("facet index out of range");
        if (tc.facets()[facet].kind != FacetKind::Top) throw GeometryError("D is not supported on the central fiber");
        dq.coeffs[facet] += coeff;
    }
    const auto data = toric::cartier_data(xq, dq);

    const auto slab = base_slab(tc.base().polytope());
    auto y = PolarizedToricPair::from_polytope(ratgeom::minkowski_sum(q, slab), {}, false);
    TDivisor dy = y.zero_divisor(), ly = y.zero_divisor(), py = y.zero_divisor();
    for (std::size_t i = 0; i < y.ray_count(); ++i) {
        const Vec& w = y.ray(i);
        const auto best = ratgeom::lp_optimize(w, q, ratgeom::Sense::Minimize);
        ly.coeffs[i] = -best.value;
        py.coeffs[i] = -ratgeom::lp_optimize(w, slab, ratgeom::Sense::Minimize).value;
        const auto& verts = q.vertices();
        std::size_t vi = 0;
        while (dot(verts[vi], w) != best.value) ++vi;
        dy.coeffs[i] = -dot(data[vi], w);
    }
    std::vector<TDivisor> factors;
    for (const auto& m : ms) factors.push_back(m.phi * ly + m.psi * py);
    factors.push_back(dy);
    factors.push_back(dy);
    return toric::intersection_number(y, factors);
}

}  // namespace kstab::testconfig
