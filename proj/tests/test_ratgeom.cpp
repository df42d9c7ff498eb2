#include "doctest.h"

#include "kstab/kernels.hpp"
#include "kstab/piecewise.hpp"
#include "kstab/polytope.hpp"

#include <random>

using namespace kstab;
using namespace kstab::ratgeom;

namespace {

LatticePolytope square() { return LatticePolytope::hull({to_vec({0, 0}), to_vec({1, 0}), to_vec({0, 1}), to_vec({1, 1})}); }
LatticePolytope simplex2() { return LatticePolytope::hull({to_vec({0, 0}), to_vec({1, 0}), to_vec({0, 1})}); }
LatticePolytope quad() { return LatticePolytope::hull({to_vec({-1, 0}), to_vec({0, -1}), to_vec({2, -1}), to_vec({-1, 2})}); }

LatticePolytope random_polytope(std::mt19937_64& rng, int dim, int npts) {
    std::uniform_int_distribution<int> d(-3, 3);
    while (true) {
        std::vector<Vec> pts;
        for (int i = 0; i < npts; ++i) {
            Vec p;
            for (int j = 0; j < dim; ++j) p.push_back(Rational(d(rng)));
            pts.push_back(p);
        }
        auto P = LatticePolytope::hull(pts);
        if (P.is_full_dimensional()) return P;
    }
}

}  // namespace

TEST_CASE("hull") {
    auto T = simplex2();
    REQUIRE(T.facet_count() == 3);
    std::vector<Vec> normals;
    for (const auto& h : T.halfspaces()) normals.push_back(h.normal);
    CHECK(normals == std::vector<Vec>{to_vec({-1, -1}), to_vec({0, 1}), to_vec({1, 0})});

    auto pt = LatticePolytope::hull({to_vec({0, 0})});
    CHECK(pt.is_degenerate());
    CHECK(pt.dim() == 0);

    CHECK(quad().facet_count() == 4);
    CHECK(quad().vertices().size() == 4);

    CHECK_THROWS_AS(LatticePolytope::hull({to_vec({0, 0}), to_vec({1, 0, 0})}), GeometryError);
}

TEST_CASE("hull drops interior and collinear points") {
    auto P = LatticePolytope::hull({to_vec({0, 0}), to_vec({2, 0}), to_vec({1, 0}), to_vec({0, 2}), to_vec({1, 1}), to_vec({0, 1})});
    CHECK(P.vertices().size() == 3);
    CHECK(volume(P) == 2);
}

TEST_CASE("volume") {
    CHECK(volume(square()) == 1);
    CHECK(volume(simplex2()) == Rational(1, 2));
    CHECK(volume(quad()) == 4);
    CHECK(volume(LatticePolytope::hull({to_vec({0, 0}), to_vec({1, 1})})) == 0);
}

TEST_CASE("barycenter") {
    CHECK(barycenter(square()) == Vec{Rational(1, 2), Rational(1, 2)});
    CHECK(barycenter(simplex2()) == Vec{Rational(1, 3), Rational(1, 3)});
    CHECK(barycenter(quad()) == Vec{Rational(1, 12), Rational(1, 12)});
    CHECK_THROWS_AS(barycenter(LatticePolytope::hull({to_vec({0, 0})})), GeometryError);
}

TEST_CASE("mixed volume and minkowski sum") {
    CHECK(mixed_volume({square(), square()}) == 1);
    CHECK(mixed_volume({square(), simplex2()}) == 1);
    auto s1 = LatticePolytope::hull({to_vec({0, 0}), to_vec({1, 0})});
    auto s2 = LatticePolytope::hull({to_vec({0, 0}), to_vec({0, 1})});
    CHECK(mixed_volume({s1, s2}) == Rational(1, 2));

    auto sum = minkowski_sum(square(), simplex2());
    CHECK(sum.vertices().size() == 5);
    CHECK(volume(sum) == Rational(7, 2));
    auto origin = LatticePolytope::hull({to_vec({0, 0})});
    CHECK(minkowski_sum(quad(), origin) == quad());
    auto pt = LatticePolytope::hull({to_vec({2, 3})});
    CHECK(minkowski_sum(square(), pt) == square().translated(to_vec({2, 3})));
}

TEST_CASE("slice") {
    CHECK(slice(square(), unit_vec(2, 0), 0) == square());
    CHECK(volume(slice(simplex2(), unit_vec(2, 0), Rational(1, 2))) == Rational(1, 8));
    CHECK(slice(square(), unit_vec(2, 0), 2).is_empty());
}

TEST_CASE("lp_optimize") {
    auto r = lp_optimize(to_vec({1, 1}), quad(), Sense::Minimize);
    CHECK(r.value == -1);
    CHECK(r.point == to_vec({-1, 0}));
    CHECK(lp_optimize(unit_vec(2, 0), square(), Sense::Maximize).value == 1);
    auto pt = LatticePolytope::hull({to_vec({3, -2})});
    CHECK(lp_optimize(to_vec({1, 1}), pt, Sense::Minimize).value == 1);
    CHECK_THROWS_AS(lp_optimize(to_vec({1, 1}), LatticePolytope::empty(2), Sense::Minimize), GeometryError);
}

TEST_CASE("lattice points") {
    CHECK(kernels::lattice_points(square(), 1).size() == 4);
    CHECK(kernels::lattice_points(simplex2(), 2).size() == 6);
    // rows y=-1..2 hold 3,3,2,1 points; Pick: area 4, 8 boundary points
    CHECK(kernels::lattice_points(quad(), 1).size() == 9);
    CHECK(kernels::count_lattice_points(quad(), 3) == 4 * 9 + 4 * 3 + 1);
}

TEST_CASE("facet lattice volume") {
    auto sq = square();
    for (std::size_t i = 0; i < sq.facet_count(); ++i)
        if (sq.halfspaces()[i].normal == to_vec({1, 0}) && sq.halfspaces()[i].offset == 0) CHECK(facet_lattice_volume(sq, i) == 1);
    auto T = simplex2();
    for (std::size_t i = 0; i < T.facet_count(); ++i)
        if (T.halfspaces()[i].normal == to_vec({-1, -1})) CHECK(facet_lattice_volume(T, i) == 1);
    auto R = LatticePolytope::hull({to_vec({0, 0}), to_vec({2, 0}), to_vec({0, 1}), to_vec({2, 1})});
    for (std::size_t i = 0; i < R.facet_count(); ++i)
        if (R.halfspaces()[i].normal == to_vec({0, 1})) CHECK(facet_lattice_volume(R, i) == 2);
}

TEST_CASE("from_halfspaces round trip") {
    std::mt19937_64 rng(11);
    for (int dim = 2; dim <= 3; ++dim) {
        for (int t = 0; t < 20; ++t) {
            auto P = random_polytope(rng, dim, dim + 4);
            CHECK(LatticePolytope::hull(P.vertices()) == P);
            CHECK(LatticePolytope::from_halfspaces(dim, P.halfspaces()) == P);
            for (long k = 1; k <= 3; ++k) CHECK(volume(P.scaled(k)) == volume(P) * (dim == 2 ? k * k : k * k * k));
        }
    }
}

TEST_CASE("degenerate polytope in 3-space") {
    auto P = LatticePolytope::hull({to_vec({0, 0, 0}), to_vec({1, 0, 0}), to_vec({0, 1, 0}), to_vec({1, 1, 0})});
    CHECK(P.dim() == 2);
    CHECK(volume(P) == 0);
    CHECK(P.contains(to_vec({0, 0, 0})));
    CHECK_FALSE(P.contains(to_vec({0, 0, 1})));
    auto Q = LatticePolytope::from_halfspaces(3, P.halfspaces());
    CHECK(Q == P);
}

TEST_CASE("mixed volume symmetric and multilinear") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        auto A = random_polytope(rng, 2, 4), B = random_polytope(rng, 2, 4), C = random_polytope(rng, 2, 4);
        CHECK(mixed_volume({A, B}) == mixed_volume({B, A}));
        CHECK(mixed_volume({minkowski_sum(A, C), B}) == mixed_volume({A, B}) + mixed_volume({C, B}));
        CHECK(mixed_volume({A, A}) == volume(A));
    }
    auto A = random_polytope(rng, 3, 6), B = random_polytope(rng, 3, 6), C = random_polytope(rng, 3, 6);
    CHECK(mixed_volume({A, B, C}) == mixed_volume({C, A, B}));
    CHECK(mixed_volume({A, A, A}) == volume(A));
}

TEST_CASE("Ehrhart leading coefficient equals volume") {
    std::mt19937_64 rng(3);
    for (int dim = 2; dim <= 3; ++dim) {
        auto P = random_polytope(rng, dim, dim + 3);
        std::vector<Rational> ks, counts;
        for (long k = 1; k <= dim + 2; ++k) {
            ks.emplace_back(k);
            counts.emplace_back(kernels::count_lattice_points(P, k));
        }
        auto poly = Polynomial::interpolate(ks, counts);
        CHECK(poly.degree() == dim);
        CHECK(poly.coeffs().back() == volume(P));
        CHECK(poly.coeffs().front() == 1);
    }
}

TEST_CASE("serial and parallel kernels agree") {
    std::mt19937_64 rng(9);
    auto P = random_polytope(rng, 3, 7);
    for (long k = 1; k <= 4; ++k) {
        CHECK(kernels::lattice_points(P, k, kernels::Exec::Serial) == kernels::lattice_points(P, k, kernels::Exec::Parallel));
        CHECK(kernels::sum_linear(P, k, {1, -2, 3}, kernels::Exec::Serial) == kernels::sum_linear(P, k, {1, -2, 3}, kernels::Exec::Parallel));
    }
}

TEST_CASE("slice volume is monotone in c") {
    auto P = quad();
    Rational prev = volume(P) + 1;
    for (int i = -2; i <= 8; ++i) {
        Rational c(i, 3);
        Rational v = volume(slice(P, to_vec({1, 1}), c));
        CHECK(v <= prev);
        prev = v;
    }
}

TEST_CASE("polynomials") {
    auto p = Polynomial::interpolate({0, 1, 2}, {1, 0, 1});  // (1-x)^2
    CHECK(p.coeffs() == std::vector<Rational>{1, -2, 1});
    CHECK(p.integrate(0, 1) == Rational(1, 3));
    PiecewisePolynomial pp({0, 1}, {p});
    CHECK(pp(2) == 0);
    CHECK(pp.integral() == Rational(1, 3));
    CHECK_THROWS_AS(PiecewisePolynomial({1, 0}, {p}), DomainError);
}

TEST_CASE("PL functions") {
    auto f = PLFunction::upper_envelope(2, {{to_vec({0, 0}), 0, std::nullopt}, {to_vec({2, 0}), -1, std::nullopt}});
    auto S = square();
    CHECK(f.min_on(S) == 0);
    CHECK(f.max_on(S) == 1);
    CHECK(f.integral_over(S) == Rational(1, 4));
    CHECK(f.linearity_cells(S).size() == 2);

    auto g = PLFunction::lower_convex_envelope({to_vec({0, 0}), to_vec({1, 0}), to_vec({0, 1}), to_vec({1, 1})}, {0, 0, 0, 1});
    CHECK(g(to_vec({1, 1})) == 1);
    CHECK(g(to_vec({1, 0})) == 0);
    CHECK(g.integral_over(S) == Rational(1, 6));

    auto a = LatticePolytope::from_halfspaces(2, {{to_vec({1, 0}), 0}, {to_vec({-2, 0}), -1}, {to_vec({0, 1}), 0}, {to_vec({0, -1}), -1}});
    auto b = LatticePolytope::from_halfspaces(2, {{to_vec({2, 0}), 1}, {to_vec({-1, 0}), -1}, {to_vec({0, 1}), 0}, {to_vec({0, -1}), -1}});
    auto ok = PLFunction::upper_envelope(2, {{to_vec({0, 0}), 0, a}, {to_vec({2, 0}), -1, b}});
    CHECK_NOTHROW(ok.certify_convex_on(S));
    // concave glue: piece 2u-1 declared on the left half where it is below 0
    auto bad = PLFunction::upper_envelope(2, {{to_vec({0, 0}), 0, b}, {to_vec({2, 0}), -1, a}});
    CHECK_THROWS_AS(bad.certify_convex_on(S), GeometryError);
}
