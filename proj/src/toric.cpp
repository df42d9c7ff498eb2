#include "kstab/toric.hpp"

#include "kstab/linalg.hpp"

#include <algorithm>

namespace kstab::toric {

TDivisor operator+(const TDivisor& a, const TDivisor& b) { return TDivisor{a.coeffs + b.coeffs}; }
TDivisor operator-(const TDivisor& a, const TDivisor& b) { return TDivisor{a.coeffs - b.coeffs}; }
TDivisor operator-(const TDivisor& a) { return TDivisor{-a.coeffs}; }
TDivisor operator*(const Rational& s, const TDivisor& a) { return TDivisor{s * a.coeffs}; }

namespace {

void check_boundary(const Vec& c, std::size_t rays) {
    if (c.size() != rays) throw DomainError("boundary needs one coefficient per ray");
    for (const auto& x : c)
        if (x < 0 || x > 1) throw DomainError("boundary coefficient " + to_string(x) + " outside [0,1]");
}

void check_divisor(const PolarizedToricPair& x, const TDivisor& d) {
    if (d.size() != x.ray_count()) throw GeometryError("divisor has " + std::to_string(d.size()) + " coefficients for " + std::to_string(x.ray_count()) + " rays");
}

bool complete_rays(const std::vector<Vec>& rays) {
    auto h = LatticePolytope::hull(rays);
    if (!h.is_full_dimensional()) return false;
    for (const auto& hs : h.halfspaces())
        if (hs.offset >= 0) return false;
    return true;
}

void check_log_cartier(const PolarizedToricPair& x) {
    try {
        cartier_data(x, canonical_divisor(x) + x.boundary_divisor());
    } catch (const GeometryError&) {
        throw GeometryError("K+Delta is not Q-Cartier on the fan");
    }
}

}  // namespace

bool Fan::is_simplicial() const {
    return std::all_of(cones.begin(), cones.end(), [&](const auto& c) { return static_cast<int>(c.size()) == dim; });
}

PolarizedToricPair PolarizedToricPair::from_polytope(const LatticePolytope& p, Vec boundary, bool require_log_cartier) {
    if (!p.is_full_dimensional()) throw GeometryError("polytope of a polarized pair must be full-dimensional");
    std::vector<Vec> rays;
    Vec l;
    for (const auto& h : p.halfspaces()) {
        rays.push_back(h.normal);
        l.push_back(-h.offset);
    }
    return from_rays(std::move(rays), l, std::move(boundary), require_log_cartier);
}

PolarizedToricPair PolarizedToricPair::from_rays(std::vector<Vec> rays, const Vec& l_coeffs, Vec boundary, bool require_log_cartier) {
    if (rays.empty()) throw GeometryError("fan without rays");
    const int n = static_cast<int>(rays.front().size());
    if (n < 1) throw GeometryError("fan of dimension 0");
    for (const auto& r : rays) {
        if (static_cast<int>(r.size()) != n) throw GeometryError("rays of mixed dimension");
        if (is_zero(r) || !is_integral(r) || primitive_integer(r) != r) throw GeometryError("ray " + to_string(r) + " is not a primitive integer vector");
    }
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (rays[i] == rays[j]) throw GeometryError("repeated ray " + to_string(rays[i]));
    if (!complete_rays(rays)) throw GeometryError("rays do not span a complete fan");
    if (l_coeffs.size() != rays.size()) throw GeometryError("polarization needs one coefficient per ray");
    if (boundary.empty()) boundary = zero_vec(static_cast<int>(rays.size()));
    check_boundary(boundary, rays.size());

    std::vector<ratgeom::Halfspace> hs;
    for (std::size_t i = 0; i < rays.size(); ++i) hs.push_back({rays[i], -l_coeffs[i]});
    auto p = LatticePolytope::from_halfspaces(n, hs);
    if (!p.is_full_dimensional()) throw GeometryError("polarization is not ample: polytope is not full-dimensional");

    PolarizedToricPair x;
    x.p_ = std::move(p);
    x.fan_.dim = n;
    x.fan_.rays = std::move(rays);
    x.boundary_ = std::move(boundary);
    x.l_ = TDivisor{l_coeffs};
    const auto& facets = x.p_.halfspaces();
    if (facets.size() != x.fan_.rays.size()) throw GeometryError("polarization is not ample: some ray does not define a facet");
    for (const auto& r : x.fan_.rays) {
        auto it = std::find_if(facets.begin(), facets.end(), [&](const ratgeom::Halfspace& h) { return h.normal == r; });
        if (it == facets.end()) throw GeometryError("polarization is not ample: ray " + to_string(r) + " does not define a facet");
        x.facet_of_ray_.push_back(static_cast<std::size_t>(it - facets.begin()));
    }
    for (std::size_t i = 0; i < x.fan_.rays.size(); ++i)
        if (facets[x.facet_of_ray_[i]].offset != -x.l_[i]) throw GeometryError("polarization is not ample: facet offset mismatch");
    for (const auto& w : x.p_.vertices()) {
        std::vector<std::size_t> cone;
        for (std::size_t i = 0; i < x.fan_.rays.size(); ++i)
            if (dot(w, x.fan_.rays[i]) == -x.l_[i]) cone.push_back(i);
        x.fan_.cones.push_back(std::move(cone));
    }
    if (require_log_cartier) check_log_cartier(x);
    return x;
}

std::size_t PolarizedToricPair::ray_index(const Vec& v) const {
    for (std::size_t i = 0; i < fan_.rays.size(); ++i)
        if (fan_.rays[i] == v) return i;
    throw GeometryError("no ray " + to_string(v) + " in the fan");
}

PolarizedToricPair PolarizedToricPair::with_boundary(Vec boundary) const {
    check_boundary(boundary, ray_count());
    PolarizedToricPair x = *this;
    x.boundary_ = std::move(boundary);
    check_log_cartier(x);
    return x;
}

PolarizedToricPair PolarizedToricPair::with_polarization(const TDivisor& l) const {
    return from_rays(fan_.rays, l.coeffs, boundary_);
}

TDivisor PolarizedToricPair::prime_divisor(std::size_t i) const {
    TDivisor d = zero_divisor();
    d.coeffs.at(i) = 1;
    return d;
}

TDivisor PolarizedToricPair::principal_divisor(const Vec& u) const {
    TDivisor d;
    for (const auto& r : fan_.rays) d.coeffs.push_back(dot(u, r));
    return d;
}

bool PolarizedToricPair::is_klt() const {
    return std::all_of(boundary_.begin(), boundary_.end(), [](const Rational& c) { return c < 1; });
}

bool PolarizedToricPair::is_lc() const {
    return std::all_of(boundary_.begin(), boundary_.end(), [](const Rational& c) { return c <= 1; });
}

std::vector<Vec> cartier_data(const PolarizedToricPair& x, const TDivisor& d) {
    check_divisor(x, d);
    std::vector<Vec> out;
    for (const auto& cone : x.fan().cones) {
        linalg::Matrix rows;
        Vec rhs;
        for (auto i : cone) {
            rows.push_back(x.ray(i));
            rhs.push_back(-d[i]);
        }
        auto m = linalg::solve_unique(rows, rhs);
        if (!m) throw GeometryError("divisor is not Q-Cartier on the fan");
        out.push_back(std::move(*m));
    }
    return out;
}

namespace {

// Applies ok to <m_sigma, v_rho> + d_rho for every cone sigma and ray rho outside it.
template <typename Pred>
bool check_positivity(const PolarizedToricPair& x, const TDivisor& d, Pred&& ok) {
    auto ms = cartier_data(x, d);
    const auto& cones = x.fan().cones;
    for (std::size_t s = 0; s < cones.size(); ++s) {
        for (std::size_t r = 0; r < x.ray_count(); ++r) {
            if (std::binary_search(cones[s].begin(), cones[s].end(), r)) continue;
            if (!ok(dot(ms[s], x.ray(r)) + d[r])) return false;
        }
    }
    return true;
}

}  // namespace

bool is_nef(const PolarizedToricPair& x, const TDivisor& d) {
    return check_positivity(x, d, [](const Rational& v) { return v >= 0; });
}

bool is_ample(const PolarizedToricPair& x, const TDivisor& d) {
    return check_positivity(x, d, [](const Rational& v) { return v > 0; });
}

LatticePolytope divisor_polytope(const PolarizedToricPair& x, const TDivisor& d) {
    check_divisor(x, d);
    std::vector<ratgeom::Halfspace> hs;
    for (std::size_t i = 0; i < x.ray_count(); ++i) hs.push_back({x.ray(i), -d[i]});
    return LatticePolytope::from_halfspaces(x.n(), std::move(hs));
}

Rational nef_shift(const PolarizedToricPair& x, const TDivisor& d) {
    auto md = cartier_data(x, d);
    auto ml = cartier_data(x, x.L());
    const auto& cones = x.fan().cones;
    Rational m = 0;
    for (std::size_t s = 0; s < cones.size(); ++s) {
        for (std::size_t r = 0; r < x.ray_count(); ++r) {
            if (std::binary_search(cones[s].begin(), cones[s].end(), r)) continue;
            Rational a = dot(md[s], x.ray(r)) + d[r];
            Rational b = dot(ml[s], x.ray(r)) + x.L()[r];
            Rational need = -a / b;
            if (need > m) m = need;
        }
    }
    return m;
}

Rational intersection_number(const PolarizedToricPair& x, const std::vector<TDivisor>& ds) {
    const int n = x.n();
    if (static_cast<int>(ds.size()) != n) throw GeometryError("intersection needs exactly n divisors");
    std::vector<Rational> shifts;
    std::vector<LatticePolytope> shifted;
    for (const auto& d : ds) {
        Rational m = nef_shift(x, d);
        shifts.push_back(m);
        shifted.push_back(divisor_polytope(x, d + m * x.L()));
    }
    const auto& pl = x.polytope();
    Rational total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        // bit i set: slot i takes D_i + m_i L; clear: slot i takes -m_i L
        Rational coeff = 1;
        std::vector<LatticePolytope> bodies;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                bodies.push_back(shifted[static_cast<std::size_t>(i)]);
            } else {
                coeff *= -shifts[static_cast<std::size_t>(i)];
                bodies.push_back(pl);
            }
        }
        if (coeff == 0) continue;
        total += coeff * ratgeom::mixed_volume(bodies);
    }
    return total * Rational(factorial(n));
}

Rational facet_degree(const PolarizedToricPair& x, const TDivisor& d) {
    check_divisor(x, d);
    Rational total = 0;
    for (std::size_t i = 0; i < x.ray_count(); ++i) {
        if (d[i] == 0) continue;
        total += d[i] * ratgeom::facet_lattice_volume(x.polytope(), x.facet_of_ray(i));
    }
    return total * Rational(factorial(x.n() - 1));
}

TDivisor canonical_divisor(const PolarizedToricPair& x) {
    TDivisor k = x.zero_divisor();
    for (auto& c : k.coeffs) c = -1;
    return k;
}

Rational slope(const PolarizedToricPair& x, const TDivisor& d, const TDivisor& l) {
    if (!is_ample(x, l)) throw GeometryError("slope needs an ample polarization");
    std::vector<TDivisor> top(static_cast<std::size_t>(x.n()), l);
    Rational ln = intersection_number(x, top);
    top.back() = d;
    return intersection_number(x, top) / ln;
}

Rational log_discrepancy(const PolarizedToricPair& x, const Vec& v) {
    if (static_cast<int>(v.size()) != x.n()) throw GeometryError("valuation of wrong dimension");
    if (is_zero(v)) return 0;
    auto best = ratgeom::lp_optimize(v, x.polytope(), ratgeom::Sense::Minimize);
    const auto& verts = x.polytope().vertices();
    auto it = std::find(verts.begin(), verts.end(), best.point);
    const auto& cone = x.fan().cones[static_cast<std::size_t>(it - verts.begin())];
    linalg::Matrix rows;
    Vec rhs;
    for (auto i : cone) {
        rows.push_back(x.ray(i));
        rhs.push_back(1 - x.boundary()[i]);
    }
    auto m = linalg::solve_unique(rows, rhs);
    if (!m) throw GeometryError("K+Delta is not Q-Cartier on the fan");
    return dot(*m, v);
}

Vec class_coordinates(const PolarizedToricPair& x, const TDivisor& d, const std::vector<TDivisor>& basis) {
    check_divisor(x, d);
    const std::size_t k = basis.size();
    linalg::Matrix rows;
    for (std::size_t r = 0; r < x.ray_count(); ++r) {
        Vec row;
        for (const auto& a : basis) {
            check_divisor(x, a);
            row.push_back(a[r]);
        }
        for (const auto& c : x.ray(r)) row.push_back(c);
        rows.push_back(std::move(row));
    }
    auto sol = linalg::solve_unique(rows, d.coeffs);
    if (!sol) throw DomainError("class is not a unique combination of the basis");
    return Vec(sol->begin(), sol->begin() + static_cast<long>(k));
}

ConeSplit cone_split(const PolarizedToricPair& x, const TDivisor& l, const TDivisor& xi, const std::vector<TDivisor>& basis) {
    if (basis.empty()) throw DomainError("empty nef basis");
    for (const auto& a : basis)
        if (!is_nef(x, a)) throw GeometryError("basis class is not nef");
    ConeSplit out;
    out.t = class_coordinates(x, l, basis);
    Rational sum = 0;
    for (const auto& t : out.t) {
        if (t <= 0) throw DomainError("L must have positive coordinates in the nef basis");
        sum += t;
    }
    if (sum != 1) throw DomainError("coordinates of L in the nef basis must sum to 1");
    out.t0 = *std::min_element(out.t.begin(), out.t.end());
    out.xi = class_coordinates(x, xi, basis);
    out.xi_norm = 0;
    for (const auto& s : out.xi) out.xi_norm += abs(s);
    if (out.xi_norm >= out.t0) throw DomainError("xi too large: its norm must be below t0");

    const Rational r = out.xi_norm / out.t0;
    out.minus_scale = 1 + r;
    out.plus_scale = 1 - r;
    out.minus_residual = x.zero_divisor();
    out.plus_residual = x.zero_divisor();
    out.minus_norm = 0;
    out.plus_norm = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Rational cm = (r * out.t[i] - out.xi[i]) / out.minus_scale;
        Rational cp = (r * out.t[i] + out.xi[i]) / out.plus_scale;
        out.minus_residual = out.minus_residual + cm * basis[i];
        out.plus_residual = out.plus_residual + cp * basis[i];
        out.minus_norm += abs(cm);
        out.plus_norm += abs(cp);
    }
    out.minus_nef = is_nef(x, out.minus_residual);
    out.plus_nef = is_nef(x, out.plus_residual);
    return out;
}

Rational cone_radius(const Rational& t0, const Rational& eps) {
    if (t0 <= 0 || eps <= 0) throw DomainError("cone radius needs t0 > 0 and eps > 0");
    return eps * t0 / (1 + t0 + eps);
}

}  // namespace kstab::toric
