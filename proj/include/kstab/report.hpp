// Invariant reports: JSON documents built from an instance, and their text
// rendering.

#pragma once

#include "kstab/io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kstab::report {

using io::json;

struct AnalyzeOptions {
    std::optional<Rational> delta0;       // threshold eps0(delta0)
    std::optional<Rational> delta1;       // bounds on eps1(delta1)
    std::optional<Rational> delta_param;  // uniform coefficient with N below
    std::optional<Vec> n_div;             // N as coefficients per ray
    std::optional<Rational> t0, eps;      // cone radius
    int precision = 32;
    std::vector<json> tcs;                // test configuration documents
    std::vector<std::string> suites;
    std::uint64_t seed = 1;
    std::size_t count = 10;
};

/// Full report; "instance" holds the re-parseable instance document.
json analyze(const io::InstanceSpec& spec, const AnalyzeOptions& opts = {});

/// delta_toric with the table of valuative data over the rays.
json delta_record(const toric::PolarizedToricPair& x);

/// DF, J^NA, triviality and the ceiling-shift self-check of one configuration.
json tc_record(const testconfig::ToricTestConfig& tc, bool with_oracle = false);

/// Thresholds from numerical delta data; absent inputs leave fields null.
json thresholds(const Rational& delta, int n, const AnalyzeOptions& opts);

/// Samples of x -> vol(L - x F_v) for every ray: ray,x,volume,volume_approx.
std::string vol_curve_csv(const toric::PolarizedToricPair& x, int samples_per_ray = 16);

/// Text table for any report produced by this module.
std::string render_text(const json& report);

}  // namespace kstab::report
