#include "doctest.h"

#include "kstab/suites.hpp"

using namespace kstab;
using namespace kstab::suites;

TEST_CASE("case seeds are stable and distinct") {
    CHECK(case_seed(7, 3) == case_seed(7, 3));
    CHECK(case_seed(7, 3) != case_seed(7, 4));
    CHECK(case_seed(7, 3) != case_seed(8, 3));
    Rng a(11), b(11);
    for (int i = 0; i < 100; ++i) {
        long x = uniform(a, -3, 5);
        CHECK(x == uniform(b, -3, 5));
        CHECK(x >= -3);
        CHECK(x <= 5);
    }
}

TEST_CASE("generators produce valid data") {
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        auto x = random_pair(rng, 2, true);
        CHECK(x.is_klt());
        auto tc = random_tc(rng, x);
        CHECK(tc.ceiling() > 0);
        auto fano = random_log_fano(rng, 2);
        CHECK(invariants::is_anticanonical(fano));
        auto n = random_nef_effective(rng, x);
        CHECK(toric::is_nef(x, n));
    }
}

TEST_CASE("every suite passes a short run") {
    for (const auto& name : suite_names()) {
        CAPTURE(name);
        auto r = run_suite(name, 99, name == "destabilizer" ? 2 : 4, kernels::Exec::Serial);
        CHECK(r.ok());
        CHECK(r.cases.size() == r.count);
        CHECK(r.passed + r.failed + r.skipped == r.count);
    }
    CHECK_THROWS_AS(run_suite("nosuch", 1, 1), DomainError);
    CHECK_FALSE(is_suite("nosuch"));
}

TEST_CASE("serial and parallel runs agree") {
    for (const char* name : {"jna", "oracle", "negative-space", "perturb"}) {
        CAPTURE(name);
        auto s = run_suite(name, 2024, 12, kernels::Exec::Serial);
        auto p = run_suite(name, 2024, 12, kernels::Exec::Parallel);
        auto js = to_json(s), jp = to_json(p);
        js.erase("seconds");
        jp.erase("seconds");
        CHECK(js == jp);
    }
}

TEST_CASE("single cases replay") {
    auto r = run_suite("calabi-yau", 31, 6, kernels::Exec::Serial);
    for (const auto& c : r.cases) {
        auto again = run_case("calabi-yau", 31, c.index);
        CHECK(again.seed == c.seed);
        CHECK(again.replay == c.replay);
        CHECK(again.status == c.status);
    }
}

TEST_CASE("abstract rule table") {
    auto table = abstract_rule_table();
    CHECK(table.size() == 10);
    for (const auto& c : table) {
        CAPTURE(c.name);
        CHECK(invariants::w_criterion(c.data).verdict == c.expected);
    }
}
