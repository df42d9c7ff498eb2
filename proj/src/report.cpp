#include "kstab/report.hpp"

#include "kstab/suites.hpp"

#include <iomanip>
#include <sstream>

namespace kstab::report {

using invariants::Verdict;
using io::encode;
using toric::PolarizedToricPair;

namespace {

json criterion_json(const invariants::CriterionResult& c) {
    return {{"verdict", invariants::to_string(c.verdict)}, {"mu", encode(c.mu)}, {"reason", c.reason}};
}

json optional_json(const std::optional<Rational>& q) { return q ? encode(*q) : json(nullptr); }

json pair_json(const PolarizedToricPair& x) {
    json rays = json::array();
    for (std::size_t i = 0; i < x.ray_count(); ++i) rays.push_back(encode(x.ray(i)));
    const Rational degree = Rational(factorial(x.n())) * ratgeom::volume(x.polytope());
    return {{"n", x.n()}, {"rays", rays}, {"polarization", encode(x.L().coeffs)}, {"boundary", encode(x.boundary())},
            {"degree", encode(degree)}, {"klt", x.is_klt()}, {"lc", x.is_lc()}, {"anticanonical", invariants::is_anticanonical(x)}};
}

}  // namespace

json delta_record(const PolarizedToricPair& x) {
    auto dt = invariants::delta_toric(x);
    json table = json::array();
    for (const auto& r : dt.records)
        table.push_back({{"ray", encode(r.v)}, {"A", encode(r.A)}, {"S", encode(r.S)}, {"beta_hat", encode(r.beta_hat)}, {"ratio", encode(r.ratio)}});
    return {{"value", encode(dt.delta)}, {"argmin", dt.argmin}, {"ray", encode(dt.ray)}, {"anticanonical", dt.anticanonical}, {"toric_restricted", true}, {"beta_table", table}};
}

json tc_record(const testconfig::ToricTestConfig& tc, bool with_oracle) {
    const Rational d = testconfig::df(tc), j = testconfig::jna(tc);
    auto moved = tc.with_ceiling(tc.ceiling() + 1);
    const bool m_invariant = testconfig::df(moved) == d && testconfig::jna(moved) == j;
    std::size_t top = 0;
    for (const auto& f : tc.facets()) top += f.kind == testconfig::FacetKind::Top;
    json out = {{"df", encode(d)}, {"jna", encode(j)}, {"jna_roof", encode(testconfig::jna_roof(tc))}, {"trivial", testconfig::is_trivial(tc)},
                {"ceiling", encode(tc.ceiling())}, {"shift", encode(tc.shift())}, {"central_fiber_components", top}, {"m_invariant", m_invariant}};
    if (with_oracle) {
        auto o = testconfig::df_weight_oracle(tc);
        out["oracle"] = {{"value", encode(o.value)}, {"step", o.step.get_str()}, {"samples", o.samples}};
    }
    return out;
}

json thresholds(const Rational& delta, int n, const AnalyzeOptions& opts) {
    const int q = n * n + n;
    json out = {{"delta", encode(delta)}, {"n", n}, {"alpha_lower_bound", encode(invariants::alpha_lower_bound(delta, n))}};
    out["eps_boundary"] = delta > 1 ? encode(invariants::fano_boundary_radius(delta, n)) : json(nullptr);
    out["eps_polarization"] = {{"value", encode((delta - 1) / ((q + 1) * delta + q - 1))}, {"applicable", delta > 1}};
    out["eps0"] = nullptr;
    if (opts.delta0) out["eps0"] = {{"delta0", encode(*opts.delta0)}, {"value", encode(invariants::fano_perturb_nef_radius(delta, *opts.delta0, n))}};
    out["eps1"] = nullptr;
    if (opts.delta1) {
        auto b = invariants::fano_perturb_upper(delta, *opts.delta1, n, opts.precision);
        out["eps1"] = {{"delta1", encode(*opts.delta1)}, {"lower", encode(b.lower)}, {"upper", encode(b.upper)}, {"exact", b.exact},
                       {"approximate", !b.exact}, {"precision", opts.precision}};
    }
    out["cone_radius"] = nullptr;
    if (opts.t0 && opts.eps) out["cone_radius"] = {{"t0", encode(*opts.t0)}, {"eps", encode(*opts.eps)}, {"value", encode(toric::cone_radius(*opts.t0, *opts.eps))}};
    return out;
}

json analyze(const io::InstanceSpec& spec, const AnalyzeOptions& opts) {
    json out = {{"version", io::kSchemaVersion}, {"kind", "analyze"}, {"instance", io::encode_instance(spec)}};
    if (spec.pair) {
        const auto& x = *spec.pair;
        out["pair"] = pair_json(x);
        auto kd = toric::canonical_divisor(x) + x.boundary_divisor();
        out["slopes"] = {{"mu_K_Delta", encode(toric::slope(x, kd, x.L()))}, {"mu_K", encode(toric::slope(x, toric::canonical_divisor(x), x.L()))}};
        if (x.is_klt()) {
            out["delta"] = delta_record(x);
            out["thresholds"] = thresholds(invariants::delta_toric(x).delta, x.n(), opts);
        } else {
            out["delta"] = nullptr;
            out["thresholds"] = nullptr;
        }
        json verdicts = json::object();
        verdicts["w_criterion"] = x.n() >= 2 ? criterion_json(invariants::w_criterion(x)) : json{{"verdict", "not-applicable"}, {"reason", "curve"}};
        if (opts.delta_param && opts.n_div) {
            auto u = invariants::fano_uniform_coefficient(x, toric::TDivisor{*opts.n_div}, *opts.delta_param);
            verdicts["uniform_coefficient"] = {{"verdict", invariants::to_string(u.verdict)}, {"delta_param", encode(u.delta_param)},
                                               {"epsilon", encode(u.epsilon)}, {"delta1", encode(u.delta1)}, {"mu", optional_json(u.mu)},
                                               {"coefficient", optional_json(u.coefficient)}, {"anticanonical", u.anticanonical},
                                               {"delta_param_in_range", u.delta_param_in_range}, {"n_nef", u.n_nef},
                                               {"eps_l_minus_n_nef", u.eps_l_minus_n_nef}};
        }
        out["verdicts"] = verdicts;
        json tcs = json::array();
        for (const auto& t : opts.tcs) tcs.push_back(tc_record(io::parse_tc(t, x)));
        out["test_configurations"] = tcs;
    }
    if (spec.abstract) {
        const auto& a = *spec.abstract;
        json ab = {{"data", io::encode_abstract(a)}, {"w_criterion", criterion_json(invariants::w_criterion(a))}};
        if (a.LN) {
            auto r = invariants::gt_radius_check(a);
            ab["gt_radius_check"] = {{"verdict", invariants::to_string(r.verdict)}, {"mu_n", encode(r.mu_n)}, {"margin", encode(r.margin)}};
        }
        out["abstract"] = ab;
    }
    json suites = json::array();
    for (const auto& name : opts.suites) {
        auto rep = suites::run_suite(name, opts.seed, opts.count);
        suites.push_back({{"suite", name}, {"seed", opts.seed}, {"count", opts.count}, {"passed", rep.passed}, {"failed", rep.failed},
                          {"skipped", rep.skipped}, {"ok", rep.ok()}});
    }
    out["suites"] = suites;
    return out;
}

std::string vol_curve_csv(const PolarizedToricPair& x, int samples_per_ray) {
    if (samples_per_ray < 1) throw DomainError("need at least one sample per ray");
    std::ostringstream os;
    os << "ray_index,ray,x,volume,volume_approx\n";
    for (std::size_t i = 0; i < x.ray_count(); ++i) {
        const auto& v = x.ray(i);
        auto curve = invariants::vol_curve(x, v);
        const Rational w = ratgeom::width(x.polytope(), v);
        std::string ray;
        for (std::size_t a = 0; a < v.size(); ++a) ray += (a ? " " : "") + to_string(v[a]);
        for (int j = 0; j <= samples_per_ray; ++j) {
            const Rational t = w * frac(j, samples_per_ray);
            const Rational vol = curve(t + curve.breakpoints().front());
            os << i << "," << ray << "," << to_string(t) << "," << to_string(vol) << "," << std::setprecision(12) << to_double(vol) << "\n";
        }
    }
    return os.str();
}

namespace {

std::string scalar(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "-";
    if (j.is_array()) {
        std::string s;
        for (const auto& e : j) s += (s.empty() ? "" : ", ") + scalar(e);
        return "(" + s + ")";
    }
    return j.dump();
}

bool is_table(const json& j) {
    if (!j.is_array() || j.empty()) return false;
    for (const auto& e : j)
        if (!e.is_object()) return false;
    return true;
}

void render(std::ostream& os, const json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            os << pad << key << ":\n";
            render(os, value, indent + 2);
        } else if (is_table(value)) {
            os << pad << key << ":\n";
            std::vector<std::string> cols;
            for (const auto& [k, v] : value.front().items())
                if (!v.is_object() && !is_table(v)) cols.push_back(k);
            std::vector<std::size_t> widths;
            for (const auto& c : cols) {
                std::size_t w = c.size();
                for (const auto& row : value) w = std::max(w, row.contains(c) ? scalar(row[c]).size() : 1);
                widths.push_back(w);
            }
            os << pad << "  ";
            for (std::size_t c = 0; c < cols.size(); ++c) os << std::left << std::setw(static_cast<int>(widths[c]) + 2) << cols[c];
            os << "\n";
            for (const auto& row : value) {
                os << pad << "  ";
                for (std::size_t c = 0; c < cols.size(); ++c)
                    os << std::left << std::setw(static_cast<int>(widths[c]) + 2) << (row.contains(cols[c]) ? scalar(row[cols[c]]) : "-");
                os << "\n";
            }
        } else if (value.is_array()) {
            os << pad << key << ": [";
            bool first = true;
            for (const auto& e : value) {
                os << (first ? "" : ", ") << scalar(e);
                first = false;
            }
            os << "]\n";
        } else {
            os << pad << key << ": " << scalar(value) << "\n";
        }
    }
}

}  // namespace

std::string render_text(const json& report) {
    std::ostringstream os;
    json body = report;
    body.erase("instance");
    render(os, body, 0);
    return os.str();
}

}  // namespace kstab::report
