// pedlab: verify congruences for ped(n), replay the mod-24 derivation, and
// export ped tables.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <pedlab/claims.hpp>
#include <pedlab/commands.hpp>
#include <pedlab/report.hpp>

namespace {

void write_json(const pedlab::VerificationReport &report, const std::string &path)
{
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << pedlab::to_json_text(report) << '\n';
    if (!out) {
        throw std::runtime_error("write to '" + path + "' failed");
    }
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Partitions with distinct even parts: congruence verification and q-series replay"};
    app.set_version_flag("--version", pedlab::tool_version);
    app.require_subcommand(1);

    auto *verify = app.add_subcommand("verify", "check congruence claims against a modular ped table");
    std::string set_name;
    std::string claims_path;
    std::string verify_json;
    pedlab::VerifyOptions vopts;
    auto *set_opt = verify->add_option("--set", set_name, "builtin claim set: ahs, theorem1, conjecture192, all")
                        ->check(CLI::IsMember(pedlab::builtin_set_names()));
    auto *claims_opt = verify->add_option("--claims", claims_path, "claim file")->check(CLI::ExistingFile);
    set_opt->excludes(claims_opt);
    verify->add_option("--n-limit", vopts.n_limit, "largest n checked per progression")->capture_default_str();
    verify->add_option("--mod", vopts.scan_modulus, "modulus of the scan table")
        ->capture_default_str()
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 31));
    verify->add_option("--ceiling", vopts.index_ceiling, "largest table index allowed")->capture_default_str();
    verify->add_option("--json", verify_json, "also write the report as JSON");

    auto *prove = app.add_subcommand("prove", "replay the series identities behind the mod-24 congruences");
    pedlab::ProveOptions popts;
    std::optional<std::uint64_t> oracle_n;
    std::string prove_json;
    prove->add_option("--order", popts.order, "truncation order")->capture_default_str();
    prove->add_option("--oracle-n-limit", oracle_n, "n-limit of the ped(225n+178) oracle scan (default: order)");
    prove->add_option("--json", prove_json, "also write the report as JSON");

    auto *table = app.add_subcommand("table", "export ped(0..n_max)");
    std::size_t n_max = 100;
    std::optional<std::uint64_t> table_mod;
    std::string format = "text";
    std::string out_path;
    table->add_option("--n-max", n_max, "largest n")->capture_default_str();
    table->add_option("--mod", table_mod, "reduce modulo M (default: exact)")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 31));
    table->add_option("--format", format, "text or json")
        ->capture_default_str()
        ->check(CLI::IsMember({"text", "json"}));
    table->add_option("--out", out_path, "output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            const auto claims = claims_path.empty() ? pedlab::builtin_claim_set(set_name.empty() ? "all" : set_name)
                                                    : pedlab::load_claim_file(claims_path);
            const auto source = claims_path.empty() ? "builtin:" + (set_name.empty() ? "all" : set_name) : claims_path;
            const auto report = pedlab::cmd_verify(claims, vopts, source);
            pedlab::render_text(std::cout, report);
            if (!verify_json.empty()) {
                write_json(report, verify_json);
            }
            return pedlab::exit_code(report);
        }
        if (prove->parsed()) {
            popts.oracle_n_limit = oracle_n;
            const auto report = pedlab::cmd_prove(popts);
            for (const auto &w : report.meta.warnings) {
                std::cerr << "warning: " << w << '\n';
            }
            pedlab::render_text(std::cout, report);
            if (!prove_json.empty()) {
                write_json(report, prove_json);
            }
            return pedlab::exit_code(report);
        }
        if (table->parsed()) {
            const auto fmt = format == "json" ? pedlab::TableFormat::json : pedlab::TableFormat::text;
            if (out_path.empty()) {
                pedlab::cmd_table(std::cout, n_max, fmt, table_mod);
            } else {
                std::ofstream out(out_path);
                if (!out) {
                    throw std::runtime_error("cannot write '" + out_path + "'");
                }
                pedlab::cmd_table(out, n_max, fmt, table_mod);
            }
            return 0;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
