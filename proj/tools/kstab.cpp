// Command-line front end.
//
// Exit codes: 0 success, 1 property failure, 2 usage or parse error,
// 3 invalid geometry.

#include "kstab/report.hpp"
#include "kstab/suites.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace kstab;
using io::json;

namespace {

enum Exit { kOk = 0, kPropertyFailure = 1, kUsage = 2, kGeometry = 3 };

struct Common {
    std::string format = "text";
};

std::optional<Rational> opt_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return parse_rational(s);
}

Vec parse_list(const std::string& s) {
    Vec out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw ParseError("empty coefficient list");
    return out;
}

io::InstanceSpec load_instance(const std::string& path) { return io::parse_instance(io::read_file(path)); }

const toric::PolarizedToricPair& require_pair(const io::InstanceSpec& spec) {
    if (!spec.pair) throw ParseError("instance has no toric pair");
    return *spec.pair;
}

void emit(const json& j, const Common& c) {
    if (c.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << report::render_text(j);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants and stability checks for polarized toric pairs"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text"}));

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Full invariant report of an instance");
    std::string instance_path, tc_path, delta0, delta1, delta_param, n_div, t0, eps, curve_csv;
    std::vector<std::string> tc_paths, suite_list;
    std::uint64_t seed = 1;
    std::size_t count = 10;
    int precision = 32;
    analyze->add_option("instance", instance_path, "Instance JSON")->required();
    analyze->add_option("--delta0", delta0, "delta0 for eps0");
    analyze->add_option("--delta1", delta1, "delta1 for eps1");
    analyze->add_option("--delta-param", delta_param, "delta parameter of the uniform coefficient");
    analyze->add_option("--N", n_div, "Divisor N as comma-separated coefficients per ray");
    analyze->add_option("--t0", t0, "t0 for the cone radius");
    analyze->add_option("--eps", eps, "eps for the cone radius");
    analyze->add_option("--precision", precision, "Bits for eps1 bounds");
    analyze->add_option("--tc", tc_paths, "Test configuration JSON (repeatable)");
    analyze->add_option("--suite", suite_list, "Suite to run alongside (repeatable)");
    analyze->add_option("--seed", seed, "Suite seed");
    analyze->add_option("--count", count, "Suite case count");
    analyze->add_option("--curve-csv", curve_csv, "Write volume-curve samples to this CSV file");

    auto* delta = app.add_subcommand("delta", "delta_toric with the valuative table over rays");
    delta->add_option("instance", instance_path, "Instance JSON")->required();
    delta->add_option("--curve-csv", curve_csv, "Write volume-curve samples to this CSV file");

    bool oracle = false;
    auto* df = app.add_subcommand("df", "DF, J^NA and self-checks for a test configuration");
    df->add_option("instance", instance_path, "Instance JSON")->required();
    df->add_option("tc", tc_path, "Test configuration JSON")->required();
    df->add_flag("--oracle", oracle, "Also run the lattice-weight oracle (Delta = 0)");

    auto* jna = app.add_subcommand("jna", "J^NA of a test configuration");
    jna->add_option("instance", instance_path, "Instance JSON")->required();
    jna->add_option("tc", tc_path, "Test configuration JSON")->required();

    std::string delta_value;
    int dim = 0;
    auto* radius = app.add_subcommand("radius", "Stability thresholds from delta data");
    radius->add_option("instance", instance_path, "Instance JSON (optional if --delta and --n are given)");
    radius->add_option("--delta", delta_value, "delta value");
    radius->add_option("--n", dim, "Dimension");
    radius->add_option("--delta0", delta0, "delta0 for eps0");
    radius->add_option("--delta1", delta1, "delta1 for eps1");
    radius->add_option("--t0", t0, "t0 for the cone radius");
    radius->add_option("--eps", eps, "eps for the cone radius");
    radius->add_option("--precision", precision, "Bits for eps1 bounds");

    std::string suite_name, dump_dir;
    bool serial = false, log_cases = false;
    auto* verify = app.add_subcommand("verify", "Run a property suite");
    verify->add_option("suite", suite_name, "Suite name")->required();
    verify->add_option("--seed", seed, "Run seed");
    verify->add_option("--count", count, "Number of cases");
    verify->add_option("--dump", dump_dir, "Directory for the first counterexample");
    verify->add_flag("--serial", serial, "Run cases serially");
    verify->add_flag("--log", log_cases, "Print one line per case");

    std::string report_path;
    auto* rep = app.add_subcommand("report", "Render a saved JSON report");
    rep->add_option("report", report_path, "Report JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        report::AnalyzeOptions opts;
        opts.delta0 = opt_rational(delta0);
        opts.delta1 = opt_rational(delta1);
        opts.delta_param = opt_rational(delta_param);
        if (!n_div.empty()) opts.n_div = parse_list(n_div);
        opts.t0 = opt_rational(t0);
        opts.eps = opt_rational(eps);
        opts.precision = precision;

        if (*analyze) {
            auto spec = load_instance(instance_path);
            for (const auto& p : tc_paths) opts.tcs.push_back(io::read_file(p));
            for (const auto& s : suite_list)
                if (!suites::is_suite(s)) throw ParseError("unknown suite '" + s + "'");
            opts.suites = suite_list;
            opts.seed = seed;
            opts.count = count;
            auto out = report::analyze(spec, opts);
            if (!curve_csv.empty()) write_text(curve_csv, report::vol_curve_csv(require_pair(spec)));
            emit(out, common);
            for (const auto& t : out.value("test_configurations", json::array()))
                if (!t.at("m_invariant").get<bool>()) return kPropertyFailure;
            for (const auto& s : out.at("suites"))
                if (!s.at("ok").get<bool>()) return kPropertyFailure;
            return kOk;
        }
        if (*delta) {
            auto spec = load_instance(instance_path);
            const auto& x = require_pair(spec);
            json out = {{"version", io::kSchemaVersion}, {"kind", "delta"}, {"instance", io::encode_instance(spec)}, {"delta", report::delta_record(x)}};
            if (!curve_csv.empty()) write_text(curve_csv, report::vol_curve_csv(x));
            emit(out, common);
            return kOk;
        }
        if (*df || *jna) {
            auto spec = load_instance(instance_path);
            const auto& x = require_pair(spec);
            auto tc = io::parse_tc(io::read_file(tc_path), x);
            json out = {{"version", io::kSchemaVersion}, {"kind", *df ? "df" : "jna"}, {"instance", io::encode_instance(spec)}, {"tc", io::encode_tc(tc)}};
            if (*df) {
                out["record"] = report::tc_record(tc, oracle);
            } else {
                out["record"] = {{"jna", io::encode(testconfig::jna(tc))}, {"jna_roof", io::encode(testconfig::jna_roof(tc))},
                                 {"trivial", testconfig::is_trivial(tc)}};
            }
            emit(out, common);
            if (*df && !out["record"]["m_invariant"].get<bool>()) return kPropertyFailure;
            if (*jna && out["record"]["jna"] != out["record"]["jna_roof"]) return kPropertyFailure;
            return kOk;
        }
        if (*radius) {
            Rational d;
            int n = dim;
            json out = {{"version", io::kSchemaVersion}, {"kind", "radius"}};
            if (!instance_path.empty()) {
                auto spec = load_instance(instance_path);
                const auto& x = require_pair(spec);
                d = invariants::delta_toric(x).delta;
                n = x.n();
                out["instance"] = io::encode_instance(spec);
            } else {
                if (delta_value.empty() || dim < 1) throw ParseError("radius needs an instance or both --delta and --n");
                d = parse_rational(delta_value);
            }
            out["thresholds"] = report::thresholds(d, n, opts);
            emit(out, common);
            return kOk;
        }
        if (*verify) {
            if (!suites::is_suite(suite_name)) throw ParseError("unknown suite '" + suite_name + "'");
            auto r = suites::run_suite(suite_name, seed, count, serial ? kernels::Exec::Serial : kernels::Exec::Parallel);
            json out = suites::to_json(r);
            if (!log_cases) out.erase("cases");
            if (r.first_failure && !dump_dir.empty()) {
                std::filesystem::create_directories(dump_dir);
                const auto& replay = r.cases[*r.first_failure].replay;
                const std::string stem = dump_dir + "/" + suite_name + "-case" + std::to_string(*r.first_failure);
                io::write_file(stem + ".json", replay);
                if (replay.contains("instance")) io::write_file(stem + "-instance.json", replay["instance"]);
                if (replay.contains("tc")) io::write_file(stem + "-tc.json", replay["tc"]);
                out["dumped"] = stem + ".json";
            }
            emit(out, common);
            return r.ok() ? kOk : kPropertyFailure;
        }
        if (*rep) {
            emit(io::read_file(report_path), common);
            return kOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const GeometryError& e) {
        std::cerr << "invalid geometry: " << e.what() << "\n";
        return kGeometry;
    } catch (const std::exception& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return kPropertyFailure;
    }
    return kUsage;
}
