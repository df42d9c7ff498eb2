#include "kstab/suites.hpp"

#include "kstab/bank.hpp"
#include "kstab/linalg.hpp"

#include <chrono>
#include <functional>
#include <map>

namespace kstab::suites {

using invariants::Verdict;
using io::json;
using ratgeom::LatticePolytope;
using ratgeom::PLFunction;
using testconfig::ToricTestConfig;
using toric::PolarizedToricPair;
using toric::TDivisor;

std::uint64_t case_seed(std::uint64_t seed, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(static_cast<std::uint64_t>(index) >> 32)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

long uniform(Rng& rng, long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = Rng::max() - Rng::max() % span;
    std::uint64_t draw;
    do draw = rng();
    while (draw >= limit);
    return lo + static_cast<long>(draw % span);
}

namespace {

Vec random_point(Rng& rng, const LatticePolytope& p) {
    Vec u = zero_vec(p.ambient_dim());
    Rational total = 0;
    for (const auto& v : p.vertices()) {
        Rational w(uniform(rng, 0, 3));
        u = u + w * v;
        total += w;
    }
    if (total == 0) return p.vertices()[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(p.vertices().size()) - 1))];
    return (1 / total) * u;
}

template <class T>
const T& choose(Rng& rng, const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(xs.size()) - 1))];
}

}  // namespace

LatticePolytope random_polytope(Rng& rng, int n) {
    for (;;) {
        std::vector<Vec> pts;
        const int count = n + 1 + static_cast<int>(uniform(rng, 0, 3));
        for (int i = 0; i < count; ++i) {
            Vec p;
            for (int a = 0; a < n; ++a) p.emplace_back(uniform(rng, -2, 2));
            pts.push_back(std::move(p));
        }
        auto p = LatticePolytope::hull(std::move(pts));
        if (p.is_full_dimensional()) return p;
    }
}

PolarizedToricPair random_pair(Rng& rng, int n, bool with_boundary) {
    for (;;) {
        auto p = random_polytope(rng, n);
        PolarizedToricPair x;
        try {
            x = PolarizedToricPair::from_polytope(p);
        } catch (const GeometryError&) {
            continue;
        }
        if (!with_boundary) return x;
        Vec c;
        for (std::size_t i = 0; i < x.ray_count(); ++i) c.push_back(frac(uniform(rng, 0, 3), 4));
        try {
            return x.with_boundary(c);
        } catch (const GeometryError&) {
            return x;
        }
    }
}

PolarizedToricPair random_log_fano(Rng& rng, int max_dim) {
    std::vector<bank::Named> fans;
    for (auto& e : bank::reflexive())
        if (e.pair.n() <= max_dim) fans.push_back(std::move(e));
    for (;;) {
        const auto& base = choose(rng, fans).pair;
        std::vector<Vec> rays = base.fan().rays;
        Vec c, l;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            c.push_back(uniform(rng, 0, 2) == 0 ? frac(uniform(rng, 1, 2), 4) : Rational(0));
            l.push_back(1 - c.back());
        }
        try {
            return PolarizedToricPair::from_rays(rays, l, c);
        } catch (const GeometryError&) {
        }
    }
}

PLFunction random_convex(Rng& rng, const LatticePolytope& p, bool integral) {
    std::vector<Vec> pts = p.vertices();
    std::vector<Rational> vals;
    if (integral) {
        auto lattice = kernels::lattice_points(p, 1);
        for (int extra = 0; extra < 3; ++extra) {
            Vec u = to_vec(choose(rng, lattice));
            if (std::find(pts.begin(), pts.end(), u) == pts.end()) pts.push_back(std::move(u));
        }
        for (std::size_t i = 0; i < pts.size(); ++i) vals.emplace_back(uniform(rng, 0, 4));
    } else {
        for (int extra = 0; extra < 3; ++extra) pts.push_back(random_point(rng, p));
        for (std::size_t i = 0; i < pts.size(); ++i) vals.push_back(frac(uniform(rng, 0, 12), 4));
    }
    return PLFunction::lower_convex_envelope(pts, vals);
}

ToricTestConfig random_tc(Rng& rng, const PolarizedToricPair& x, bool integral) {
    auto f = random_convex(rng, x.polytope(), integral);
    const Rational gap = integral ? Rational(uniform(rng, 1, 2)) : frac(uniform(rng, 1, 4), 2);
    return ToricTestConfig::build(x, f, f.max_on(x.polytope()) + gap);
}

TDivisor random_nef_effective(Rng& rng, const PolarizedToricPair& x) {
    TDivisor n = x.zero_divisor();
    const long terms = uniform(rng, 1, 2);
    for (long t = 0; t < terms; ++t) {
        const Rational s = frac(uniform(rng, 1, 8), 4);
        n = n + s * (x.L() + x.principal_divisor(random_point(rng, x.polytope())));
    }
    if (uniform(rng, 0, 1) == 1) {
        auto d = x.prime_divisor(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(x.ray_count()) - 1)));
        const Rational s = frac(uniform(rng, 1, 4), 2);
        try {
            if (toric::is_nef(x, d)) n = n + s * d;
        } catch (const GeometryError&) {
            // prime divisor not Q-Cartier on a non-simplicial fan
        }
    }
    return n;
}

namespace {

std::string show(const Rational& q) { return to_string(q); }

void expect(CaseResult& r, bool ok, const std::string& detail) {
    if (!ok && r.status != Status::Fail) {
        r.status = Status::Fail;
        r.detail = detail;
    } else if (r.status == Status::Pass) {
        r.detail = detail;
    }
}

void record(CaseResult& r, const PolarizedToricPair& x) { r.replay["instance"] = io::encode_pair(x); }
void record(CaseResult& r, const ToricTestConfig& tc) {
    record(r, tc.base());
    r.replay["tc"] = io::encode_tc(tc);
}

int dim_of(std::size_t index, int max_dim) { return 1 + static_cast<int>(index % static_cast<std::size_t>(max_dim)); }

const std::vector<bank::Named>& reflexive_bank() {
    static const std::vector<bank::Named> entries = bank::reflexive();
    return entries;
}

void perturb_case(Rng& rng, std::size_t index, CaseResult& r) {
    auto x = random_pair(rng, dim_of(index, 3), true);
    auto tc = random_tc(rng, x);
    record(r, tc);
    auto n = random_nef_effective(rng, x);
    r.replay["extra"] = {{"N", io::encode(n.coeffs)}};
    auto p = testconfig::perturb_check(tc, n);
    expect(r, p.holds, "lhs=" + show(p.lhs) + " rhs=" + show(p.rhs));
}

void calabi_yau_case(Rng& rng, std::size_t index, CaseResult& r) {
    auto base = random_pair(rng, dim_of(index, 3), false);
    auto x = base.with_boundary(Vec(base.ray_count(), Rational(1)));
    auto tc = random_tc(rng, x);
    record(r, tc);
    const Rational d = testconfig::df(tc);
    expect(r, d >= 0, "df=" + show(d));
}

void jna_case(Rng& rng, std::size_t index, CaseResult& r) {
    auto x = random_pair(rng, dim_of(index, 3), false);
    auto tc = random_tc(rng, x);
    for (int tries = 0; testconfig::is_trivial(tc) && tries < 16; ++tries) tc = random_tc(rng, x);
    record(r, tc);
    if (testconfig::is_trivial(tc)) {
        r.status = Status::Skip;
        r.detail = "no nonconstant f drawn";
        return;
    }
    const Rational j = testconfig::jna(tc), roof = testconfig::jna_roof(tc);
    expect(r, j > 0 && j == roof, "jna=" + show(j) + " roof=" + show(roof));
    const Rational c = frac(uniform(rng, 0, 8), 3);
    auto flat = ToricTestConfig::build(x, PLFunction::constant(x.n(), c), c + 1);
    const Rational j0 = testconfig::jna(flat);
    expect(r, j0 == 0 && testconfig::is_trivial(flat), "constant f: jna=" + show(j0));
}

void oracle_case(Rng& rng, std::size_t index, CaseResult& r) {
    auto x = random_pair(rng, dim_of(index, 2), false);
    auto tc = random_tc(rng, x, true);
    record(r, tc);
    const Rational d = testconfig::df(tc);
    auto o = testconfig::df_weight_oracle(tc, 40, kernels::Exec::Serial);
    const bool sign = sgn(d) == sgn(o.value);
    const Rational j = testconfig::jna(tc), roof = testconfig::jna_roof(tc);
    expect(r, sign && d == o.value && j == roof, "df=" + show(d) + " oracle=" + show(o.value) + " jna=" + show(j) + " roof=" + show(roof));
}

void s_value_case(Rng& rng, std::size_t index, CaseResult& r) {
    const int n = dim_of(index, 3);
    auto x = PolarizedToricPair::from_polytope(random_polytope(rng, n), {}, false);
    Vec v;
    do {
        v.clear();
        for (int a = 0; a < n; ++a) v.emplace_back(uniform(rng, -3, 3));
    } while (is_zero(v));
    v = primitive_integer(v);
    record(r, x);
    r.replay["extra"] = {{"v", io::encode(v)}};
    const Rational closed = invariants::s_value_closed(x, v);
    const Rational integral = invariants::s_value(x, v);
    const Rational ehrhart = invariants::s_value_ehrhart(x, v);
    expect(r, closed == integral && closed == ehrhart, "closed=" + show(closed) + " integral=" + show(integral) + " ehrhart=" + show(ehrhart));
}

PolarizedToricPair add_boundary(const PolarizedToricPair& x, const TDivisor& b) {
    return PolarizedToricPair::from_rays(x.fan().rays, (x.L() - b).coeffs, x.boundary() + b.coeffs);
}

void monotonicity_case(Rng& rng, std::size_t, CaseResult& r) {
    auto x = random_log_fano(rng, 3);
    record(r, x);
    const int n = x.n();
    const Rational delta = invariants::delta_toric(x).delta;
    const Rational delta0 = delta * frac(uniform(rng, 1, 7), 8);
    const Rational eps0 = invariants::fano_perturb_nef_radius(delta, delta0, n);
    const Rational t = eps0 * frac(uniform(rng, 1, 4), 4);
    TDivisor b = t * (x.L() + x.principal_divisor(random_point(rng, x.polytope())));
    r.replay["extra"] = {{"B", io::encode(b.coeffs)}, {"delta0", io::encode(delta0)}, {"eps0", io::encode(eps0)}};
    if (!toric::is_nef(x, eps0 * x.L() - b)) throw std::logic_error("eps0 L - B is not nef");
    PolarizedToricPair y;
    try {
        y = add_boundary(x, b);
    } catch (const GeometryError& e) {
        expect(r, false, std::string("(X, Delta + B) is not log Fano: ") + e.what());
        return;
    }
    const Rational d = invariants::delta_toric(y).delta;
    expect(r, y.is_klt() && d >= delta0, "delta0=" + show(delta0) + " delta(new)=" + show(d));
}

void upper_bound_case(Rng& rng, std::size_t, CaseResult& r) {
    auto x = random_log_fano(rng, 3);
    record(r, x);
    const int n = x.n();
    const Rational delta = invariants::delta_toric(x).delta;
    const Rational delta1 = delta * (1 + frac(uniform(rng, 1, 4), 4));
    const auto eps1 = invariants::fano_perturb_upper(delta, delta1, n);
    const Rational t = eps1.lower * frac(uniform(rng, 1, 3), 4);
    TDivisor b = t * (x.L() + x.principal_divisor(random_point(rng, x.polytope())));
    r.replay["extra"] = {{"B", io::encode(b.coeffs)}, {"delta1", io::encode(delta1)}, {"eps1_lower", io::encode(eps1.lower)}};
    auto y = add_boundary(x, b);
    const Rational d = invariants::delta_toric(y).delta;
    expect(r, d <= delta1, "delta1=" + show(delta1) + " delta(new)=" + show(d));
}

void destabilizer_case(Rng&, std::size_t index, CaseResult& r) {
    const auto& entry = reflexive_bank()[index % reflexive_bank().size()];
    const auto& x = entry.pair;
    record(r, x);
    auto dt = invariants::delta_toric(x);
    if (dt.delta < 1) {
        Rational best = 0;
        for (const auto& s : testconfig::destabilizer_scan(x, dt.ray)) best = s.df < best ? s.df : best;
        expect(r, best < 0, entry.name + ": delta=" + show(dt.delta) + " min df=" + show(best));
    } else {
        Rational best = 0;
        for (std::size_t i = 0; i < x.ray_count(); ++i)
            for (const auto& s : testconfig::destabilizer_scan(x, x.ray(i))) best = s.df < best ? s.df : best;
        expect(r, best >= 0, entry.name + ": delta=" + show(dt.delta) + " min df=" + show(best));
    }
}

// Basis of the Q-Cartier divisors supported on the central fiber, as
// coefficient vectors over the top facets: a_F and m_sigma with
// <m_sigma, w_F> = -a_F on every facet through the vertex sigma.
std::vector<Vec> fiber_cartier_basis(const ToricTestConfig& tc, const std::vector<std::size_t>& tops) {
    const auto& q = tc.Q();
    const std::size_t dim = static_cast<std::size_t>(q.ambient_dim());
    const std::size_t t = tops.size(), cols = t + q.vertices().size() * dim;
    linalg::Matrix rows;
    for (std::size_t j = 0; j < q.facet_count(); ++j) {
        auto it = std::find(tops.begin(), tops.end(), j);
        for (auto vi : q.vertices_on_facet(j)) {
            Vec row(cols);
            for (std::size_t a = 0; a < dim; ++a) row[t + vi * dim + a] = q.halfspaces()[j].normal[a];
            if (it != tops.end()) row[static_cast<std::size_t>(it - tops.begin())] = 1;
            rows.push_back(std::move(row));
        }
    }
    std::vector<Vec> basis;
    for (const auto& v : linalg::nullspace(rows, static_cast<int>(cols))) {
        Vec a(v.begin(), v.begin() + static_cast<long>(t));
        if (!is_zero(a)) basis.push_back(std::move(a));
    }
    return basis;
}

void negativity_case(Rng& rng, std::size_t index, CaseResult& r) {
    auto x = random_pair(rng, dim_of(index, 2), false);
    auto tc = random_tc(rng, x);
    record(r, tc);
    std::vector<std::size_t> tops;
    for (std::size_t j = 0; j < tc.facets().size(); ++j)
        if (tc.facets()[j].kind == testconfig::FacetKind::Top) tops.push_back(j);
    std::vector<testconfig::NefCombo> ms;
    for (int i = 0; i < x.n() - 1; ++i) {
        Rational phi(uniform(rng, 0, 2)), psi(uniform(rng, 0, 2));
        if (phi == 0 && psi == 0) phi = 1;
        ms.push_back({phi, psi});
    }
    Vec a = zero_vec(static_cast<int>(tops.size()));
    for (const auto& b : fiber_cartier_basis(tc, tops)) a = a + Rational(uniform(rng, -2, 2)) * b;
    std::vector<std::pair<std::size_t, Rational>> d;
    json dj = json::array();
    for (std::size_t i = 0; i < tops.size(); ++i) {
        d.emplace_back(tops[i], a[i]);
        dj.push_back({{"facet", tops[i]}, {"coefficient", io::encode(a[i])}});
    }
    r.replay["extra"] = {{"D", dj}};
    const Rational v = testconfig::negativity_check(tc, d, ms);
    expect(r, v <= 0, "value=" + show(v));
}

void technical_case(Rng& rng, std::size_t index, CaseResult& r) {
    const auto& x = reflexive_bank()[index % reflexive_bank().size()].pair;
    auto tc = random_tc(rng, x);
    record(r, tc);
    auto t = testconfig::technical_bound_check(tc);
    expect(r, t.holds, invariants::to_string(t.verdict) + " df=" + show(t.df) + " bound=" + show(t.bound));
}

void negative_space_case(Rng& rng, std::size_t index, CaseResult& r) {
    auto x = random_pair(rng, dim_of(index, 3), true);
    record(r, x);
    auto kd = toric::canonical_divisor(x) + x.boundary_divisor();
    const Rational mu = toric::slope(x, kd, x.L());
    bool ok = mu <= 0;
    std::string verdict = "n/a";
    if (x.n() >= 2) {
        auto w = invariants::w_criterion(x);
        verdict = invariants::to_string(w.verdict);
        ok = ok && w.verdict == Verdict::Inconclusive;
    }
    expect(r, ok, "mu=" + show(mu) + " w_criterion=" + verdict);
}

void cone_split_case(Rng& rng, std::size_t, CaseResult& r) {
    struct Spec {
        PolarizedToricPair x;
        std::vector<Vec> basis_rays;
    };
    static const std::vector<Spec> specs = {
        {bank::p1xp1(), {to_vec({1, 0}), to_vec({0, 1})}},
        {bank::bl1_p2(), {to_vec({-1, -1}), to_vec({1, 0})}},
        {bank::by_name("P1xP1xP1"), {to_vec({1, 0, 0}), to_vec({0, 1, 0}), to_vec({0, 0, 1})}},
        {bank::by_name("P2xP1"), {to_vec({1, 0, 0}), to_vec({0, 0, 1})}},
    };
    const auto& spec = choose(rng, specs);
    std::vector<TDivisor> basis;
    for (const auto& v : spec.basis_rays) basis.push_back(spec.x.prime_divisor(spec.x.ray_index(v)));
    Vec t;
    Rational total = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        t.emplace_back(uniform(rng, 1, 5));
        total += t.back();
    }
    TDivisor l = spec.x.zero_divisor();
    for (std::size_t i = 0; i < basis.size(); ++i) l = l + (t[i] / total) * basis[i];
    auto x = spec.x.with_polarization(l);
    record(r, x);
    const Rational t0 = *std::min_element(t.begin(), t.end()) / total;
    const Rational eps = frac(1, uniform(rng, 1, 4));
    const Rational radius = toric::cone_radius(t0, eps);
    const long scale = 4 * static_cast<long>(basis.size());
    TDivisor xi = x.zero_divisor();
    for (const auto& a : basis) xi = xi + (radius * frac(uniform(rng, -4, 4), scale)) * a;
    r.replay["extra"] = {{"xi", io::encode(xi.coeffs)}, {"eps", io::encode(eps)}};
    auto s = toric::cone_split(x, x.L(), xi, basis);
    const bool exact = s.minus_scale * (x.L() - s.minus_residual) == x.L() + xi && s.plus_scale * (x.L() + s.plus_residual) == x.L() + xi;
    expect(r, exact && s.minus_nef && s.plus_nef && s.minus_norm <= eps && s.plus_norm <= eps,
           "radius=" + show(radius) + " norms=" + show(s.minus_norm) + "," + show(s.plus_norm));
}

void curve_case(Rng& rng, std::size_t, CaseResult& r) {
    const long d = uniform(rng, 1, 3);
    auto base = PolarizedToricPair::from_polytope(LatticePolytope::hull({to_vec({0}), to_vec({d})}));
    Vec c{frac(uniform(rng, 0, 3), 4), frac(uniform(rng, 0, 3), 4)};
    auto x = base.with_boundary(c);
    auto tc = random_tc(rng, x);
    record(r, tc);
    // A ~ L - (K + Delta) on P^1 has degree d + 2 - c_0 - c_1
    const Rational deg_a = Rational(d) + 2 - c[0] - c[1];
    const Rational mu_a = deg_a / d;
    const Rational lhs = testconfig::df(tc), j = testconfig::jna(tc);
    const Rational bound = (1 - mu_a) * j;
    const Rational split = frac(uniform(rng, 0, 4), 4);
    TDivisor a{Vec{split * deg_a, (1 - split) * deg_a}};
    auto p = testconfig::perturb_check(tc, a);
    expect(r, lhs >= bound && p.holds, "df=" + show(lhs) + " (1-mu_A) J=" + show(bound));
}

using CaseFn = std::function<void(Rng&, std::size_t, CaseResult&)>;

const std::map<std::string, CaseFn>& registry() {
    static const std::map<std::string, CaseFn> fns = {
        {"perturb", perturb_case},
        {"calabi-yau", calabi_yau_case},
        {"jna", jna_case},
        {"oracle", oracle_case},
        {"s-value", s_value_case},
        {"monotonicity", monotonicity_case},
        {"upper-bound", upper_bound_case},
        {"destabilizer", destabilizer_case},
        {"negativity", negativity_case},
        {"technical", technical_case},
        {"negative-space", negative_space_case},
        {"cone-split", cone_split_case},
        {"curve", curve_case},
    };
    return fns;
}

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skip: return "skip";
    }
    return "?";
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

bool is_suite(const std::string& name) { return registry().count(name) > 0; }

CaseResult run_case(const std::string& suite, std::uint64_t seed, std::size_t index) {
    auto it = registry().find(suite);
    if (it == registry().end()) throw DomainError("unknown suite '" + suite + "'");
    CaseResult r;
    r.index = index;
    r.seed = case_seed(seed, index);
    r.replay = {{"version", io::kSchemaVersion}, {"suite", suite}, {"seed", seed}, {"index", index}};
    Rng rng(r.seed);
    try {
        it->second(rng, index, r);
    } catch (const std::exception& e) {
        r.status = Status::Fail;
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

SuiteReport run_suite(const std::string& suite, std::uint64_t seed, std::size_t count, kernels::Exec exec) {
    if (!is_suite(suite)) throw DomainError("unknown suite '" + suite + "'");
    SuiteReport rep;
    rep.suite = suite;
    rep.seed = seed;
    rep.count = count;
    rep.cases.resize(count);
    const auto start = std::chrono::steady_clock::now();
    const long total = static_cast<long>(count);
    if (exec == kernels::Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < total; ++i) rep.cases[static_cast<std::size_t>(i)] = run_case(suite, seed, static_cast<std::size_t>(i));
    } else {
        for (long i = 0; i < total; ++i) rep.cases[static_cast<std::size_t>(i)] = run_case(suite, seed, static_cast<std::size_t>(i));
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const auto& c : rep.cases) {
        if (c.status == Status::Pass) ++rep.passed;
        if (c.status == Status::Skip) ++rep.skipped;
        if (c.status == Status::Fail) {
            ++rep.failed;
            if (!rep.first_failure) rep.first_failure = c.index;
        }
    }
    return rep;
}

json to_json(const SuiteReport& report) {
    json cases = json::array();
    for (const auto& c : report.cases)
        cases.push_back({{"index", c.index}, {"seed", c.seed}, {"status", status_name(c.status)}, {"detail", c.detail}});
    json out = {{"version", io::kSchemaVersion}, {"suite", report.suite}, {"seed", report.seed}, {"count", report.count},
                {"passed", report.passed}, {"failed", report.failed}, {"skipped", report.skipped}, {"ok", report.ok()},
                {"seconds", report.seconds}, {"cases", cases}};
    out["first_counterexample"] = report.first_failure ? report.cases[*report.first_failure].replay : json(nullptr);
    return out;
}

std::vector<AbstractCase> abstract_rule_table() {
    using D = invariants::AbstractSlopeData;
    auto make = [](int n, long ln, long lk, bool ample, bool nef) {
        D d;
        d.n = n;
        d.Ln = ln;
        d.LK = lk;
        d.ample_flag = ample;
        d.nef_flag = nef;
        return d;
    };
    return {
        {"negative slope", make(2, 9, -9, false, false), Verdict::Inconclusive},
        {"zero slope", make(2, 4, 0, true, true), Verdict::Inconclusive},
        {"negative slope, ample flag", make(4, 5, -1, true, true), Verdict::Inconclusive},
        {"ample surface", make(2, 4, 2, true, true), Verdict::Uniform},
        {"nef surface", make(2, 4, 2, false, true), Verdict::Semistable},
        {"neither", make(2, 4, 2, false, false), Verdict::Inconclusive},
        {"ample threefold", make(3, 8, 12, true, false), Verdict::Uniform},
        {"nef threefold", make(3, 8, 12, false, true), Verdict::Semistable},
        {"nef fivefold", make(5, 1, 3, false, true), Verdict::Semistable},
        {"ample fourfold", make(4, 16, 1, true, true), Verdict::Uniform},
    };
}

}  // namespace kstab::suites
