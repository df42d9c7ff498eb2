#include "doctest.h"

#include "kstab/bank.hpp"
#include "kstab/report.hpp"

using namespace kstab;
using io::json;

namespace {

json analyze_all(const io::InstanceSpec& spec) {
    report::AnalyzeOptions opts;
    opts.delta0 = frac(1, 2);
    opts.delta1 = frac(3, 2);
    opts.t0 = frac(1, 3);
    opts.eps = frac(1, 5);
    opts.precision = 24;
    return report::analyze(spec, opts);
}

}  // namespace

TEST_CASE("rationals and vectors round-trip") {
    for (const auto& q : {Rational(0), Rational(-3), frac(7, 12), frac(-5, 3)}) CHECK(io::decode_rational(io::encode(q)) == q);
    CHECK(io::encode(frac(2, 4)) == json("1/2"));
    CHECK(io::decode_rational(json(5)) == 5);
    CHECK(io::decode_rational(json("-6/4")) == frac(-3, 2));
    Vec v = {frac(1, 3), Rational(-2), Rational(0)};
    CHECK(io::decode_vec(io::encode(v)) == v);
    CHECK_THROWS_AS(io::decode_rational(json("1/0")), ParseError);
    CHECK_THROWS_AS(io::decode_rational(json("abc")), ParseError);
    CHECK_THROWS_AS(io::decode_rational(json::array()), ParseError);
}

TEST_CASE("pairs round-trip through their encoding") {
    for (const auto& entry : bank::reflexive()) {
        CAPTURE(entry.name);
        auto spec = io::parse_instance(io::encode_pair(entry.pair));
        REQUIRE(spec.pair);
        CHECK(spec.pair->polytope().vertices() == entry.pair.polytope().vertices());
        CHECK(io::encode_pair(*spec.pair) == io::encode_pair(entry.pair));
    }
}

TEST_CASE("instance documents") {
    SUBCASE("vertices") {
        auto spec = io::parse_instance(json::parse(R"({"version":1,"polytope":{"vertices":[["0"],["1"]]}})"));
        REQUIRE(spec.pair);
        CHECK(spec.pair->n() == 1);
        CHECK(spec.pair->ray_count() == 2);
        CHECK_FALSE(spec.abstract);
    }
    SUBCASE("halfspaces with boundary") {
        auto spec = io::parse_instance(json::parse(R"({"version":1,
            "polytope":{"halfspaces":[{"normal":[1,0],"offset":"0"},{"normal":[0,1],"offset":"0"},
                                      {"normal":[-1,0],"offset":"-1"},{"normal":[0,-1],"offset":"-1"}]},
            "boundary":[{"ray":[1,0],"coefficient":"1/2"}]})"));
        REQUIRE(spec.pair);
        CHECK(spec.pair->polytope().vertices().size() == 4);
        Rational total = 0;
        for (const auto& c : spec.pair->boundary()) total += c;
        CHECK(total == frac(1, 2));
    }
    SUBCASE("rays with polarization") {
        auto spec = io::parse_instance(json::parse(R"({"version":1,"rays":[[1,0],[0,1],[-1,-1],[1,1]],"polarization":[1,1,1,1]})"));
        REQUIRE(spec.pair);
        CHECK(ratgeom::volume(spec.pair->polytope()) == ratgeom::volume(bank::bl1_p2().polytope()));
    }
    SUBCASE("abstract data") {
        auto spec = io::parse_instance(json::parse(R"({"version":1,"abstract":{"n":2,"Ln":"4","LK":"2","ample":true,"nef":true}})"));
        REQUIRE(spec.abstract);
        CHECK_FALSE(spec.pair);
        CHECK(io::parse_instance(io::encode_instance(spec)).abstract.has_value());
    }
}

TEST_CASE("malformed instances") {
    CHECK_THROWS_AS(io::parse_instance(json::parse(R"({"version":2,"polytope":{"vertices":[["0"],["1"]]}})")), ParseError);
    CHECK_THROWS_AS(io::parse_instance(json::parse(R"({"version":1})")), ParseError);
    CHECK_THROWS_AS(io::parse_instance(json::parse(R"({"version":1,"polytope":{"vertices":"x"}})")), ParseError);
    CHECK_THROWS_AS(io::parse_instance(json::parse(R"({"version":1,"polytope":{"vertices":[["0","x"]]}})")), ParseError);
    CHECK_THROWS_AS(io::parse_instance(json::parse(R"({"version":1,"polytope":{"halfspaces":[{"normal":[1,0],"offset":"0"},{"normal":[0,1],"offset":"0"}]}})")),
                    GeometryError);
    CHECK_THROWS_AS(io::parse_instance(json::parse(R"({"version":1,"polytope":{"vertices":[["0","0"],["1","1"]]}})")), GeometryError);
}

TEST_CASE("test configuration documents") {
    auto x = bank::p1();
    auto tc = io::parse_tc(json::parse(R"({"version":1,"f":{"points":[["0"],["1/2"],["1"]],"values":["0","0","1"]},"ceiling":"3"})"), x);
    CHECK(tc.ceiling() == 3);
    auto again = io::parse_tc(io::encode_tc(tc), x);
    CHECK(testconfig::df(again) == testconfig::df(tc));
    CHECK(testconfig::jna(again) == testconfig::jna(tc));
    CHECK(io::encode_tc(again) == io::encode_tc(tc));

    auto dflt = io::parse_tc(json::parse(R"({"version":1,"f":{"constant":"2"}})"), x);
    CHECK(testconfig::is_trivial(dflt));

    CHECK_THROWS_AS(io::parse_tc(json::parse(R"({"version":1,"f":{"pieces":[{"slope":["1","0"],"offset":"0"}]}})"), x), ParseError);
    CHECK_THROWS_AS(io::parse_tc(json::parse(R"({"version":1,"f":{"pieces":[{"slope":["1"],"offset":"0"}]},"ceiling":"1"})"), x), GeometryError);
}

TEST_CASE("reports re-analyse to the same document") {
    std::vector<toric::PolarizedToricPair> pairs = {bank::p1(), bank::p2(), bank::p1xp1(), bank::bl1_p2()};
    pairs.push_back(toric::PolarizedToricPair::from_polytope(
        ratgeom::LatticePolytope::hull({to_vec({0, 0}), to_vec({2, 0}), to_vec({0, 1}), to_vec({1, 1})})));
    for (const auto& x : pairs) {
        io::InstanceSpec spec{x, std::nullopt};
        json first = analyze_all(spec);
        json second = analyze_all(io::parse_instance(first.at("instance")));
        CHECK(first == second);
        CHECK(json::parse(first.dump()) == first);
    }
}

TEST_CASE("report contents") {
    json p2 = report::analyze({bank::p2(), std::nullopt});
    CHECK(p2["delta"]["value"] == "1");
    CHECK(p2["slopes"]["mu_K"] == "-1");
    CHECK(p2["thresholds"]["alpha_lower_bound"] == "1/3");
    CHECK(p2["pair"]["degree"] == "9");
    CHECK(p2["suites"].empty());

    json bl1 = report::analyze({bank::bl1_p2(), std::nullopt});
    CHECK(bl1["delta"]["value"] == "6/7");
    CHECK(bl1["delta"]["beta_table"].size() == 4);

    auto text = report::render_text(bl1);
    CHECK(text.find("6/7") != std::string::npos);
    CHECK(text.find("beta_table") != std::string::npos);
    CHECK(text.find("instance") == std::string::npos);

    auto csv = report::vol_curve_csv(bank::p1(), 4);
    CHECK(csv.rfind("ray_index,ray,x,volume,volume_approx\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 2 * 5);
}
