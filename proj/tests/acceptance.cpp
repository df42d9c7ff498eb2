// Acceptance criteria, one line per criterion.

#include "kstab/bank.hpp"
#include "kstab/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace kstab;

namespace {

constexpr std::uint64_t kSeed = 2024;

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Runs one criterion; a limit of 0 means no timing limit.
bool criterion(int id, const char* name, double limit, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = seconds_since(start);
    bool ok = out.pass;
    if (limit > 0 && secs > limit) {
        ok = false;
        out.detail += " (over time limit)";
    }
    std::printf("[%s] %2d %-34s %8.2fs", ok ? "PASS" : "FAIL", id, name, secs);
    if (limit > 0) std::printf(" (limit %.0fs)", limit);
    std::printf("  %s\n", out.detail.c_str());
    std::fflush(stdout);
    return ok;
}

Outcome suite(const std::string& name, std::size_t count) {
    auto r = suites::run_suite(name, kSeed, count);
    std::string detail = name + " seed=" + std::to_string(kSeed) + " passed=" + std::to_string(r.passed) +
                         " failed=" + std::to_string(r.failed) + " skipped=" + std::to_string(r.skipped);
    if (r.first_failure) detail += " first failure: " + r.cases[*r.first_failure].detail;
    return {r.failed == 0 && r.skipped == 0 && r.passed == count, detail};
}

Outcome timed_delta(const toric::PolarizedToricPair& x, const Rational& expected, double limit) {
    const auto start = Clock::now();
    const Rational d = invariants::delta_toric(x).delta;
    const double secs = seconds_since(start);
    return {d == expected && secs < limit, "delta=" + to_string(d) + " in " + std::to_string(secs) + "s"};
}

Rational min_scan_df(const toric::PolarizedToricPair& x, const Vec& v) {
    Rational best = 0;
    for (const auto& s : testconfig::destabilizer_scan(x, v)) best = s.df < best ? s.df : best;
    return best;
}

}  // namespace

int main() {
    int failures = 0;
    auto run = [&](int id, const char* name, double limit, const std::function<Outcome()>& body) {
        if (!criterion(id, name, limit, body)) ++failures;
    };

    run(1, "delta(P2) = delta(P1xP1) = 1", 0, [] {
        auto a = timed_delta(bank::p2(), 1, 1.0);
        auto b = timed_delta(bank::p1xp1(), 1, 1.0);
        return Outcome{a.pass && b.pass, "P2 " + a.detail + "; P1xP1 " + b.detail};
    });

    run(2, "delta(Bl1 P2) = 6/7 at ray (1,1)", 0, [] {
        auto dt = invariants::delta_toric(bank::bl1_p2());
        std::string ratios;
        for (const auto& r : dt.records) ratios += (ratios.empty() ? "" : " ") + to_string(r.ratio);
        const bool ok = dt.delta == frac(6, 7) && dt.ray == to_vec({1, 1});
        return Outcome{ok, "delta=" + to_string(dt.delta) + " ratios " + ratios};
    });

    run(3, "P1, f=u: DF=0, J=1/2, M-invariant", 0, [] {
        auto x = toric::PolarizedToricPair::from_polytope(ratgeom::LatticePolytope::hull({to_vec({0}), to_vec({1})}));
        auto f = ratgeom::PLFunction::upper_envelope(1, {ratgeom::AffinePiece{to_vec({1}), 0, std::nullopt}});
        auto tc2 = testconfig::ToricTestConfig::build(x, f, 2);
        auto tc3 = testconfig::ToricTestConfig::build(x, f, 3);
        const Rational d2 = testconfig::df(tc2), j2 = testconfig::jna(tc2), d3 = testconfig::df(tc3), j3 = testconfig::jna(tc3);
        const bool ok = d2 == 0 && j2 == frac(1, 2) && d3 == d2 && j3 == j2;
        return Outcome{ok, "M=2: DF=" + to_string(d2) + " J=" + to_string(j2) + "; M=3: DF=" + to_string(d3) + " J=" + to_string(j3)};
    });

    run(4, "perturbation inequality x200", 300, [] { return suite("perturb", 200); });
    run(5, "DF >= 0 when K+Delta = 0, x100", 0, [] { return suite("calabi-yau", 100); });
    run(6, "J^NA > 0 iff nonconstant, x100", 0, [] { return suite("jna", 100); });
    run(7, "weight oracle agreement x20", 0, [] { return suite("oracle", 20); });
    run(8, "S-value three-way equality x100", 0, [] { return suite("s-value", 100); });
    run(9, "delta monotonicity under B, x50", 0, [] { return suite("monotonicity", 50); });

    run(10, "threshold arithmetic", 0, [] {
        const Rational a = invariants::fano_boundary_radius(2, 2);
        const Rational b = invariants::fano_polarization_radius(2, 2);
        const Rational c = invariants::fano_perturb_nef_radius(frac(6, 7), frac(1, 2), 2);
        const Rational d = toric::cone_radius(frac(1, 2), frac(1, 2));
        const bool ok = a == frac(1, 7) && b == frac(1, 19) && c == frac(5, 66) && d == frac(1, 8);
        return Outcome{ok, to_string(a) + " " + to_string(b) + " " + to_string(c) + " " + to_string(d)};
    });

    run(11, "destabilizer scan", 0, [] {
        const Rational bl1 = min_scan_df(bank::bl1_p2(), to_vec({1, 1}));
        Rational others = 0;
        for (const auto& x : {bank::p2(), bank::p1xp1()})
            for (std::size_t i = 0; i < x.ray_count(); ++i) {
                const Rational m = min_scan_df(x, x.ray(i));
                others = m < others ? m : others;
            }
        return Outcome{bl1 < 0 && others >= 0, "Bl1 min DF=" + to_string(bl1) + "; P2, P1xP1 min DF=" + to_string(others)};
    });

    run(12, "negative space and abstract rules", 0, [] {
        auto s = suite("negative-space", 100);
        std::size_t matched = 0;
        const auto table = suites::abstract_rule_table();
        for (const auto& c : table) matched += invariants::w_criterion(c.data).verdict == c.expected;
        const bool ok = s.pass && table.size() == 10 && matched == table.size();
        return Outcome{ok, s.detail + "; abstract " + std::to_string(matched) + "/" + std::to_string(table.size())};
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
