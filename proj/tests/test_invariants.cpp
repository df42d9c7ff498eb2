#include "doctest.h"

#include "kstab/bank.hpp"
#include "kstab/invariants.hpp"

#include <random>

using namespace kstab;
using namespace kstab::invariants;
using kstab::ratgeom::LatticePolytope;

namespace {

PolarizedToricPair hyperplane_p2() {
    return PolarizedToricPair::from_polytope(LatticePolytope::hull({to_vec({0, 0}), to_vec({1, 0}), to_vec({0, 1})}));
}

PolarizedToricPair unit_square_pair() {
    return PolarizedToricPair::from_polytope(LatticePolytope::hull({to_vec({0, 0}), to_vec({1, 0}), to_vec({0, 1}), to_vec({1, 1})}));
}

}  // namespace

TEST_CASE("volume curve") {
    auto x = hyperplane_p2();
    auto c = vol_curve(x, to_vec({1, 0}));
    REQUIRE(c.polys().size() == 1);
    CHECK(c.breakpoints() == std::vector<Rational>{0, 1});
    CHECK(c.polys()[0].coeffs() == std::vector<Rational>{1, -2, 1});
    CHECK(c(2) == 0);
    CHECK(c(0) == 1);

    auto y = unit_square_pair();
    auto cy = vol_curve(y, to_vec({1, 0}));
    CHECK(cy.polys()[0].coeffs() == std::vector<Rational>{2, -2});
    CHECK(cy(0) == 2);

    for (const auto& [name, p] : bank::reflexive()) {
        CAPTURE(name);
        auto cur = vol_curve(p, p.ray(0));
        CHECK(cur(0) == Rational(factorial(p.n())) * ratgeom::volume(p.polytope()));
    }
    CHECK_THROWS_AS(vol_curve(x, to_vec({0, 0})), DomainError);
}

TEST_CASE("S values") {
    CHECK(s_value(hyperplane_p2(), to_vec({1, 0})) == Rational(1, 3));
    CHECK(s_value(bank::p2(), to_vec({1, 0})) == 1);
    CHECK(s_value(bank::bl1_p2(), to_vec({1, 1})) == Rational(7, 6));
    CHECK(s_value_ehrhart(bank::bl1_p2(), to_vec({1, 1})) == Rational(7, 6));
    CHECK(s_value_ehrhart(hyperplane_p2(), to_vec({1, 0})) == Rational(1, 3));
}

TEST_CASE("S value three ways on random data") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int t = 0; t < 12; ++t) {
        const int n = 2 + t % 2;
        std::vector<Vec> pts;
        for (int i = 0; i < n + 3; ++i) {
            Vec p;
            for (int j = 0; j < n; ++j) p.push_back(Rational(d(rng)));
            pts.push_back(p);
        }
        auto P = LatticePolytope::hull(pts);
        if (!P.is_full_dimensional()) continue;
        // non-simplicial fans can make K non-Q-Cartier; such pairs are rejected
        std::optional<PolarizedToricPair> xo;
        try {
            xo = PolarizedToricPair::from_polytope(P);
        } catch (const GeometryError&) {
            continue;
        }
        const auto& x = *xo;
        Vec v;
        for (int j = 0; j < n; ++j) v.push_back(Rational(d(rng)));
        if (is_zero(v)) continue;
        auto s = s_value(x, v);
        CHECK(s == s_value_closed(x, v));
        CHECK(s == s_value_ehrhart(x, v));
    }
}

TEST_CASE("beta hat") {
    CHECK(beta_hat(bank::p2(), to_vec({1, 0})) == 0);
    CHECK(beta_hat(bank::bl1_p2(), to_vec({1, 1})) == Rational(-1, 6));
    CHECK(beta_hat(bank::p2(), to_vec({2, 0})) == 0);
    auto r1 = valuative_record(bank::bl1_p2(), to_vec({1, 1}));
    auto r3 = valuative_record(bank::bl1_p2(), to_vec({3, 3}));
    CHECK(r1.ratio == r3.ratio);
    CHECK(r1.beta_hat == r3.beta_hat);
    CHECK(r3.A == 3 * r1.A);
}

TEST_CASE("delta toric") {
    auto p2 = delta_toric(bank::p2());
    CHECK(p2.delta == 1);
    CHECK(p2.anticanonical);
    auto q = delta_toric(bank::p1xp1());
    CHECK(q.delta == 1);
    auto b = delta_toric(bank::bl1_p2());
    CHECK(b.delta == Rational(6, 7));
    CHECK(b.ray == to_vec({1, 1}));
    std::vector<Rational> ratios;
    for (const auto& r : b.records) ratios.push_back(r.ratio);
    // rays e1, e2, -e1-e2, e1+e2
    CHECK(ratios == std::vector<Rational>{Rational(12, 13), Rational(12, 13), Rational(6, 5), Rational(6, 7)});
    CHECK_FALSE(delta_toric(hyperplane_p2()).anticanonical);

    Vec c = zero_vec(3);
    c[0] = 1;
    CHECK_THROWS_AS(delta_toric(bank::p2().with_boundary(c)), DomainError);
}

TEST_CASE("delta toric is at most 1 on the reflexive bank and minimal over sampled valuations") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> d(-6, 6);
    for (const auto& [name, x] : bank::reflexive()) {
        CAPTURE(name);
        auto r = delta_toric(x);
        CHECK(r.anticanonical);
        CHECK(r.delta <= 1);
        for (int t = 0; t < 20; ++t) {
            Vec v;
            for (int j = 0; j < x.n(); ++j) v.push_back(frac(d(rng), 1 + (t % 3)));
            if (is_zero(v)) continue;
            CHECK(r.delta <= toric::log_discrepancy(x, v) / s_value_closed(x, v));
        }
    }
}

TEST_CASE("threshold formulas") {
    CHECK(alpha_lower_bound(1, 2) == Rational(1, 3));
    CHECK(alpha_lower_bound(Rational(6, 7), 2) == Rational(2, 7));
    CHECK(alpha_lower_bound(2, 3) == Rational(1, 2));

    CHECK(fano_perturb_nef_radius(Rational(6, 7), Rational(1, 2), 2) == Rational(5, 66));
    CHECK(fano_perturb_nef_radius(2, 1, 2) == Rational(1, 7));
    CHECK(fano_boundary_radius(2, 2) == Rational(1, 7));
    CHECK(fano_perturb_nef_radius(2, Rational(1999, 1000), 2) == Rational(1, 7000));
    CHECK_THROWS_AS(fano_perturb_nef_radius(1, 1, 2), DomainError);

    CHECK(fano_polarization_radius(2, 2) == Rational(1, 19));
    CHECK(fano_polarization_radius(2, 3) == Rational(1, 37));
    CHECK_THROWS_AS(fano_polarization_radius(1, 2), DomainError);
}

TEST_CASE("upper perturbation radius") {
    auto a = fano_perturb_upper(1, 8, 1);
    CHECK(a.exact);
    CHECK(a.lower == Rational(1, 2));

    auto b = fano_perturb_upper(1, 2, 2, 32);
    CHECK_FALSE(b.exact);
    CHECK(b.upper - b.lower <= Rational(1) / Rational(Integer(1) << 32));
    // 1 - 2^{-1/3} = 0.2062994740...
    CHECK(b.lower < frac(2062994741L, 10000000000L));
    CHECK(b.lower > frac(2062994739L, 10000000000L));
    // lower bound certified: (1 - lower)^3 >= 1/2
    Rational x = 1 - b.lower;
    CHECK(x * x * x >= Rational(1, 2));

    auto c = fano_perturb_upper(1, 4, 1);  // 1 - sqrt(1/4) = 1/2 = delta/2
    CHECK(c.exact);
    CHECK(c.lower == Rational(1, 2));
    auto e = fano_perturb_upper(Rational(99, 100), 1, 2, 40);
    CHECK(e.lower > 0);
    CHECK(e.lower < Rational(1, 100));
    CHECK_THROWS_AS(fano_perturb_upper(2, 2, 2), DomainError);
}

TEST_CASE("uniform coefficient") {
    CHECK(fano_uniform_coefficient(2, 2, 0) == Rational(1, 6));
    CHECK(fano_uniform_coefficient(2, 2, Rational(1, 20)) == Rational(1, 15));
    CHECK(fano_uniform_coefficient(2, 2, Rational(1, 6)) == Rational(-1, 6));

    auto x = bank::p2();
    auto r = fano_uniform_coefficient(x, x.zero_divisor(), Rational(1, 2));
    CHECK(r.delta == 1);
    CHECK_FALSE(r.delta_param_in_range);
    CHECK(r.verdict == Verdict::Inconclusive);
    CHECK(r.mu == 0);
}

TEST_CASE("criterion verdicts") {
    for (const auto& [name, x] : bank::reflexive()) {
        if (x.n() < 2) {
            CHECK_THROWS_AS(w_criterion(x), DomainError);
            continue;
        }
        auto r = w_criterion(x);
        CHECK(r.mu <= 0);
        CHECK(r.verdict == Verdict::Inconclusive);
    }
    AbstractSlopeData a{2, 4, 3, std::nullopt, true, true, false};
    CHECK(w_criterion(a).verdict == Verdict::Uniform);
    a.ample_flag = false;
    CHECK(w_criterion(a).verdict == Verdict::Semistable);
    a.nef_flag = false;
    CHECK(w_criterion(a).verdict == Verdict::Inconclusive);
    AbstractSlopeData z{2, 4, 0, std::nullopt, true, true, false};
    CHECK(w_criterion(z).verdict == Verdict::Inconclusive);
    AbstractSlopeData curve{1, 4, 1, std::nullopt, true, true, false};
    CHECK_THROWS_AS(w_criterion(curve), DomainError);
}

TEST_CASE("radius check") {
    AbstractSlopeData d{2, 5, 5, Rational(0), false, false, true};
    auto r = gt_radius_check(d);
    CHECK(r.verdict == Verdict::Uniform);
    CHECK(r.margin == 1);
    d.LN = Rational(1);
    r = gt_radius_check(d);
    CHECK(r.mu_n == Rational(1, 5));
    CHECK(r.margin == Rational(1, 5));
    CHECK(r.verdict == Verdict::Uniform);
    d.Ln = 4;
    r = gt_radius_check(d);
    CHECK(r.margin == 0);
    CHECK(r.verdict == Verdict::Inconclusive);
    d.LN.reset();
    CHECK_THROWS_AS(gt_radius_check(d), DomainError);
}
