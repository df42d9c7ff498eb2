// Seeded property suites over random toric instances.
//
// Every case draws its instance from a generator seeded by (seed, index), so a
// single case can be replayed without running the others. Cases run serially
// or under OpenMP; results are reported in index order either way.

#pragma once

#include "kstab/io.hpp"
#include "kstab/kernels.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace kstab::suites {

using Rng = std::mt19937_64;

/// Seed of case `index` in a run seeded by `seed`.
std::uint64_t case_seed(std::uint64_t seed, std::size_t index);

/// Uniform integer in [lo, hi] by rejection, identical on every platform.
long uniform(Rng& rng, long lo, long hi);

/// Full-dimensional hull of a few random integer points in [-2, 2]^n.
ratgeom::LatticePolytope random_polytope(Rng& rng, int n);

/// Random pair with Q-Cartier K, optionally with a random toric boundary
/// (coefficients in {0, 1/4, 1/2, 3/4}).
toric::PolarizedToricPair random_pair(Rng& rng, int n, bool with_boundary);

/// Random toric log Fano pair polarized by -(K + Delta), built on a
/// reflexive fan of dimension <= max_dim with a small random boundary.
toric::PolarizedToricPair random_log_fano(Rng& rng, int max_dim);

/// Lower convex envelope of random values over the vertices of p and a few
/// more points. With `integral`, the points are lattice points and the values
/// integers, so that Q is a lattice polytope for integral ceilings.
ratgeom::PLFunction random_convex(Rng& rng, const ratgeom::LatticePolytope& p, bool integral);

/// Random test configuration with a ceiling above max f.
testconfig::ToricTestConfig random_tc(Rng& rng, const toric::PolarizedToricPair& x, bool integral = false);

/// Random effective nef divisor: sums of t (L + div chi^u) with u in P and
/// multiples of nef prime divisors.
toric::TDivisor random_nef_effective(Rng& rng, const toric::PolarizedToricPair& x);

enum class Status { Pass, Fail, Skip };

struct CaseResult {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    Status status = Status::Pass;
    std::string detail;
    /// Instance data of the case: "instance", optionally "tc" and "extra".
    io::json replay;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t count = 0;
    std::size_t passed = 0, failed = 0, skipped = 0;
    std::vector<CaseResult> cases;
    std::optional<std::size_t> first_failure;
    double seconds = 0;

    bool ok() const { return failed == 0; }
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// One case; exceptions thrown by the library count as failures.
CaseResult run_case(const std::string& suite, std::uint64_t seed, std::size_t index);

/// Throws DomainError for unknown suites.
SuiteReport run_suite(const std::string& suite, std::uint64_t seed, std::size_t count, kernels::Exec exec = kernels::Exec::Parallel);

io::json to_json(const SuiteReport& report);

/// Hand-built slope data with the verdict the rule table assigns.
struct AbstractCase {
    std::string name;
    invariants::AbstractSlopeData data;
    invariants::Verdict expected;
};
std::vector<AbstractCase> abstract_rule_table();

}  // namespace kstab::suites
