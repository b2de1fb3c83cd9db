#include "eigenbound/bounds.hpp"
#include "eigenbound/oracle.hpp"
#include "eigenbound/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr const char* kToolVersion = "1.0.0";
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string fmt17(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string utc_timestamp()
{
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::uint64_t env_seed()
{
    if (const char* s = std::getenv("EIGENBOUND_SEED"))
        return std::strtoull(s, nullptr, 10);
    return eigenbound::verify::VerifyOptions{}.seed;
}

std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

json make_manifest(const std::string& config, std::uint64_t seed)
{
    char digest[20];
    std::snprintf(digest, sizeof(digest), "%016" PRIx64, fnv1a(config));
    return {{"tool_version", kToolVersion},
            {"timestamp", utc_timestamp()},
            {"seed", seed},
            {"config_digest", digest}};
}

json check_to_json(const eigenbound::CheckRecord& rec)
{
    return {{"name", rec.name},
            {"paper_anchor", rec.paper_anchor},
            {"lhs", rec.lhs},
            {"rhs", rec.rhs},
            {"abs_discrepancy", rec.abs_discrepancy},
            {"tolerance", rec.tolerance},
            {"pass", rec.pass}};
}

struct RangeSpec {
    double lo = 0.0;
    double hi = 0.0;
};

/// "a..b" inclusive, or a single value.
RangeSpec parse_range(const std::string& s)
{
    RangeSpec r;
    const auto pos = s.find("..");
    try {
        if (pos == std::string::npos) {
            r.lo = r.hi = std::stod(s);
        } else {
            r.lo = std::stod(s.substr(0, pos));
            r.hi = std::stod(s.substr(pos + 2));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed range: " + s);
    }
    if (r.hi < r.lo)
        throw std::invalid_argument("empty range: " + s);
    return r;
}

int run_verify(const std::vector<std::string>& tol_flags,
               const std::string& format)
{
    eigenbound::verify::VerifyOptions opts;
    opts.seed = env_seed();
    for (const auto& flag : tol_flags) {
        const auto eq = flag.find('=');
        if (eq == std::string::npos || eq == 0) {
            std::cerr << "malformed --tol override: " << flag << "\n";
            return kExitUsage;
        }
        char* end = nullptr;
        const double tol = std::strtod(flag.c_str() + eq + 1, &end);
        if (end == flag.c_str() + eq + 1 || *end != '\0') {
            std::cerr << "malformed --tol override: " << flag << "\n";
            return kExitUsage;
        }
        opts.tol_overrides[flag.substr(0, eq)] = tol;
    }

    const auto checks = eigenbound::verify::run_verification(opts);

    std::set<std::string> names;
    for (const auto& rec : checks)
        names.insert(rec.name);
    for (const auto& [name, tol] : opts.tol_overrides) {
        (void)tol;
        if (!names.count(name)) {
            std::cerr << "unknown check name in --tol override: " << name
                      << "\n";
            return kExitUsage;
        }
    }

    bool all_pass = true;
    if (format == "json") {
        std::ostringstream cfg;
        cfg << "verify;seed=" << opts.seed;
        for (const auto& [name, tol] : opts.tol_overrides)
            cfg << ";" << name << "=" << fmt17(tol);
        json out{{"manifest", make_manifest(cfg.str(), opts.seed)},
                 {"checks", json::array()}};
        for (const auto& rec : checks) {
            out["checks"].push_back(check_to_json(rec));
            all_pass = all_pass && rec.pass;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& rec : checks) {
            all_pass = all_pass && rec.pass;
            std::printf("%-4s %-28s lhs=%-24s rhs=%-24s |disc|=%-13.6g tol=%-8.2g [%s]\n",
                        rec.pass ? "PASS" : "FAIL", rec.name.c_str(),
                        fmt17(rec.lhs).c_str(), fmt17(rec.rhs).c_str(),
                        rec.abs_discrepancy, rec.tolerance,
                        rec.paper_anchor.c_str());
        }
        std::printf("%zu checks, %s\n", checks.size(),
                    all_pass ? "all passed" : "FAILURES present");
    }
    return all_pass ? 0 : kExitCheckFailed;
}

int run_bound(int n, double k, double dtilde, const std::string& format)
{
    eigenbound::bounds::BoundReport rep;
    try {
        rep = eigenbound::bounds::bound_report({n, k, dtilde});
    } catch (const std::domain_error& e) {
        std::cerr << "invalid geometry: " << e.what() << "\n";
        return kExitUsage;
    }

    if (format == "csv") {
        std::cout << "n,K,d_tilde,reilly,ling,refined,implicit,best,ratio\n"
                  << n << "," << fmt17(k) << "," << fmt17(dtilde) << ","
                  << (rep.reilly ? fmt17(*rep.reilly) : "") << ","
                  << fmt17(rep.ling) << "," << fmt17(rep.refined) << ","
                  << fmt17(rep.implicit) << "," << fmt17(rep.best) << ","
                  << fmt17(rep.ratio_refined_over_ling) << "\n";
    } else if (format == "json") {
        json out{{"n", n},
                 {"K", k},
                 {"d_tilde", dtilde},
                 {"reilly", rep.reilly ? json(*rep.reilly) : json(nullptr)},
                 {"ling", rep.ling},
                 {"refined", rep.refined},
                 {"implicit", rep.implicit},
                 {"best", rep.best},
                 {"ratio_refined_over_ling", rep.ratio_refined_over_ling}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("geometry: n=%d K=%s d_tilde=%s\n", n, fmt17(k).c_str(),
                    fmt17(dtilde).c_str());
        if (rep.reilly)
            std::printf("  reilly   = %s\n", fmt17(*rep.reilly).c_str());
        else
            std::printf("  reilly   = (not applicable, K = 0)\n");
        std::printf("  ling     = %s\n", fmt17(rep.ling).c_str());
        std::printf("  refined  = %s\n", fmt17(rep.refined).c_str());
        std::printf("  implicit = %s\n", fmt17(rep.implicit).c_str());
        std::printf("  best     = %s\n", fmt17(rep.best).c_str());
        std::printf("  refined/ling = %s\n",
                    fmt17(rep.ratio_refined_over_ling).c_str());
    }
    return 0;
}

int run_oracle(int n, double k, double r, const std::string& format)
{
    eigenbound::oracle::ShootingResult res;
    try {
        res = eigenbound::oracle::cap_eigenvalue({n, k, r});
    } catch (const std::domain_error& e) {
        std::cerr << "inadmissible cap: " << e.what() << "\n";
        return kExitUsage;
    }

    if (format == "json") {
        json out{{"lambda", res.lambda},
                 {"residual", res.residual},
                 {"bisection_iterations", res.bisection_iterations},
                 {"ode_steps", res.ode_steps}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::printf("lambda               = %s\n", fmt17(res.lambda).c_str());
        std::printf("residual             = %s\n", fmt17(res.residual).c_str());
        std::printf("bisection_iterations = %d\n", res.bisection_iterations);
        std::printf("ode_steps            = %ld\n", res.ode_steps);
    }
    return 0;
}

int run_sweep(const std::string& n_range, double k, const std::string& r_range,
              int steps, const std::string& out_path)
{
    std::vector<int> n_values;
    std::vector<double> r_values;
    try {
        const auto nr = parse_range(n_range);
        for (int n = static_cast<int>(nr.lo); n <= static_cast<int>(nr.hi); ++n)
            n_values.push_back(n);
        const auto rr = parse_range(r_range);
        if (steps < 1)
            throw std::invalid_argument("--steps must be >= 1");
        if (steps == 1 || rr.hi == rr.lo) {
            r_values.push_back(rr.lo);
        } else {
            for (int i = 0; i < steps; ++i)
                r_values.push_back(rr.lo + (rr.hi - rr.lo) * i / (steps - 1));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    if (n_values.empty() || r_values.empty()) {
        std::cerr << "empty sweep grid\n";
        return kExitUsage;
    }

    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot open output path: " << out_path << "\n";
        return kExitUsage;
    }

    out << "n,K,R,d_tilde,lambda_true,reilly,ling,refined,implicit,best,"
           "gap_best,ratio,error\n";
    bool any_failed = false;
    for (int n : n_values) {
        const auto rows = eigenbound::oracle::sharpness_sweep(n, k, r_values);
        for (const auto& row : rows) {
            out << n << "," << fmt17(k) << "," << fmt17(row.R) << ","
                << fmt17(2.0 * row.R) << ",";
            if (!row.error.empty()) {
                std::string msg = row.error;
                for (char& c : msg)
                    if (c == ',' || c == '\n')
                        c = ';';
                out << ",,,,,,,," << msg << "\n";
                any_failed = true;
                continue;
            }
            const auto& rep = row.report;
            const bool sound =
                row.gap_best >= -1e-8 * std::abs(row.lambda_true);
            out << fmt17(row.lambda_true) << ","
                << (rep.reilly ? fmt17(*rep.reilly) : "") << ","
                << fmt17(rep.ling) << "," << fmt17(rep.refined) << ","
                << fmt17(rep.implicit) << "," << fmt17(rep.best) << ","
                << fmt17(row.gap_best) << ","
                << fmt17(rep.ratio_refined_over_ling) << ","
                << (sound ? "" : "soundness violation: bound exceeds oracle")
                << "\n";
            any_failed = any_failed || !sound;
        }
    }
    return any_failed ? kExitCheckFailed : 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dirichlet eigenvalue lower bounds: verification suite, "
                 "bound reports, and the spherical-cap shooting oracle"};
    app.require_subcommand(1);
    app.fallthrough(); // lets the global --json appear after a subcommand
    bool json_shorthand = false;
    app.add_flag("--json", json_shorthand, "shorthand for --format json");

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "run the identity/inequality ledger");
    std::vector<std::string> tol_flags;
    std::string verify_format = "text";
    verify_cmd->add_option("--tol", tol_flags,
                           "tolerance override, name=value (repeatable)");
    verify_cmd->add_option("--format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // bound
    auto* bound_cmd = app.add_subcommand("bound", "compute a bound report");
    int b_n = 0;
    double b_k = 0.0, b_d = 0.0;
    std::string bound_format = "text";
    bound_cmd->add_option("--n", b_n, "dimension (>= 2)")->required();
    bound_cmd->add_option("--k", b_k, "Ricci constant K (>= 0)")->required();
    bound_cmd->add_option("--dtilde", b_d, "in-diameter (> 0)")->required();
    bound_cmd->add_option("--format", bound_format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // oracle
    auto* oracle_cmd =
        app.add_subcommand("oracle", "spherical-cap eigenvalue by shooting");
    int o_n = 0;
    double o_k = 0.0, o_r = 0.0;
    std::string oracle_format = "text";
    oracle_cmd->add_option("--n", o_n, "dimension (>= 2)")->required();
    oracle_cmd->add_option("--k", o_k, "curvature K (> 0)")->required();
    oracle_cmd->add_option("--r", o_r, "cap radius (<= pi/(2 sqrt K))")
        ->required();
    oracle_cmd->add_option("--format", oracle_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // sweep
    auto* sweep_cmd =
        app.add_subcommand("sweep", "oracle-vs-bounds sweep to CSV");
    std::string s_n, s_r, s_out;
    double s_k = 0.0;
    int s_steps = 0;
    sweep_cmd->add_option("--n", s_n, "dimension or integer range a..b")
        ->required();
    sweep_cmd->add_option("--k", s_k, "curvature K (> 0)")->required();
    sweep_cmd->add_option("--r", s_r, "radius or range a..b")->required();
    sweep_cmd->add_option("--steps", s_steps, "points in the radius range")
        ->required();
    sweep_cmd->add_option("--out", s_out, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (json_shorthand) {
        verify_format = "json";
        bound_format = "json";
        oracle_format = "json";
    }

    try {
        if (verify_cmd->parsed())
            return run_verify(tol_flags, verify_format);
        if (bound_cmd->parsed())
            return run_bound(b_n, b_k, b_d, bound_format);
        if (oracle_cmd->parsed())
            return run_oracle(o_n, o_k, o_r, oracle_format);
        if (sweep_cmd->parsed())
            return run_sweep(s_n, s_k, s_r, s_steps, s_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
