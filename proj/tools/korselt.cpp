// korselt: compute rational Korselt sets of semiprimes and check the
// statements about them over ranges of N = pq.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "korselt/commands.hpp"
#include "korselt/version.hpp"

namespace {

int emit(const korselt::CommandResult& result, korselt::Format format, const std::string& out_path) {
    for (const auto& m : result.messages) std::cerr << m << "\n";
    const std::string body = korselt::render(result.report, format);
    if (out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return korselt::kExitUsage;
        }
        out << body;
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rational Korselt sets of semiprimes N = pq"};
    app.set_version_flag("--version", std::string("korselt ") + korselt::kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "table";
    unsigned jobs = 0;
    std::string out_path;
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--jobs", jobs, "Worker threads (0 = all cores); affects wall time only");
    app.add_option("--out", out_path, "Write the report to FILE instead of stdout");

    std::int64_t n = 0;
    std::string alpha;
    auto* base_check = app.add_subcommand("base-check", "Is ALPHA (a or a/b) an N-Korselt base?");
    base_check->add_option("N", n, "Squarefree composite")->required();
    base_check->add_option("ALPHA", alpha, "Candidate base, \"a\" or \"a/b\"")->required();

    std::string domain = "q";
    auto* set = app.add_subcommand("set", "Korselt set of a semiprime N");
    set->add_option("N", n, "Semiprime p*q")->required();
    set->add_option("DOMAIN", domain, "z, qz or q")->check(CLI::IsMember({"z", "qz", "q"}));

    std::string claim;
    std::int64_t p_max = 0;
    std::int64_t q_max = 0;
    auto* verify = app.add_subcommand("verify", "Check a claim on every semiprime with p <= P_MAX, q <= Q_MAX");
    verify->add_option("CLAIM", claim, "main, structure, prop31, cor32, prop41, prop42, prop43, prop44 or parity")
        ->required();
    verify->add_option("P_MAX", p_max, "Largest p")->required();
    verify->add_option("Q_MAX", q_max, "Largest q (defaults to P_MAX)");

    int which = 0;
    auto* tables = app.add_subcommand("tables", "Reproduce reference table 1 or 2 and diff it");
    tables->add_option("WHICH", which, "1 or 2")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return korselt::kExitUsage;
    }

    const korselt::Format format = korselt::parse_format(format_name);
    if (*base_check) return emit(korselt::cmd_base_check(n, alpha), format, out_path);
    if (*set) return emit(korselt::cmd_set(n, domain), format, out_path);
    if (*verify) return emit(korselt::cmd_verify(claim, p_max, q_max == 0 ? p_max : q_max, jobs), format, out_path);
    if (*tables) return emit(korselt::cmd_tables(which, jobs), format, out_path);
    return korselt::kExitUsage;
}
