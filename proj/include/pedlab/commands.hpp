#pragma once

// The verify / prove / table commands as library calls. The CLI in
// tools/pedlab.cpp is a thin argument-parsing layer over these.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "claims.hpp"
#include "dissection.hpp"
#include "partitions.hpp"
#include "report.hpp"

namespace pedlab {

struct VerifyOptions {
    std::uint64_t n_limit = 100;
    std::uint64_t scan_modulus = 192;
    // refuse to build tables beyond this index
    std::uint64_t index_ceiling = 2'000'000;
};

namespace detail {

struct PlannedClaim {
    CongruenceClaim claim;
    std::uint64_t n_limit;
};

struct PlannedFamily {
    std::uint64_t k;
    std::uint64_t n_limit;
};

inline std::uint64_t capped(std::uint64_t n_limit, const std::optional<std::uint64_t> &cap)
{
    return cap ? std::min(n_limit, *cap) : n_limit;
}

class Stopwatch {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

} // namespace detail

/// Checks every claim and family in `claims` against one ped table reduced
/// mod `options.scan_modulus`, sized for the largest index needed.
inline VerificationReport cmd_verify(const ClaimFile &claims, const VerifyOptions &options,
                                     const std::string &source_name = "claims")
{
    const detail::Stopwatch clock;
    std::vector<detail::PlannedClaim> planned;
    std::vector<detail::PlannedFamily> families;
    for (const auto &c : claims.claims) {
        planned.push_back({c, options.n_limit});
    }
    for (const auto &d : claims.families) {
        for (auto k = d.k_min; k <= d.k_max; ++k) {
            const auto n = detail::capped(options.n_limit, d.n_cap);
            if (d.kind == FamilyKind::theorem_family) {
                families.push_back({k, n});
                continue;
            }
            const auto prog = family_offset(d.kind, k);
            CongruenceClaim c{prog.step, prog.offset, prog.modulus, ClaimStatus::theorem,
                              to_string(d.kind) + ", alpha = " + std::to_string(k) + ": ped("
                                  + std::to_string(prog.step) + "n+" + std::to_string(prog.offset) + ") == 0 (mod "
                                  + std::to_string(prog.modulus) + ")"};
            planned.push_back({c, n});
        }
    }

    std::uint64_t top = 0;
    for (const auto &p : planned) {
        if (options.scan_modulus % p.claim.modulus != 0) {
            throw std::invalid_argument("scan modulus " + std::to_string(options.scan_modulus)
                                        + " is not a multiple of claim modulus " + std::to_string(p.claim.modulus));
        }
        top = std::max(top, detail::max_index(p.claim.step, p.claim.offset, p.n_limit));
    }
    for (const auto &f : families) {
        if (options.scan_modulus % 24 != 0) {
            throw std::invalid_argument("family checks need a scan modulus divisible by 24");
        }
        const auto prog = family_offset(FamilyKind::theorem_family, f.k);
        top = std::max({top, detail::max_index(9, 7, f.n_limit), detail::max_index(prog.step, prog.offset, f.n_limit)});
    }
    if (top > options.index_ceiling) {
        throw std::length_error("claims need ped(n) up to n = " + std::to_string(top) + ", above the ceiling "
                                + std::to_string(options.index_ceiling));
    }

    const auto table = ped_table(top, ModDomain{options.scan_modulus});

    VerificationReport report;
    report.meta.parameters = {{"command", "verify"},
                              {"claims", source_name},
                              {"n_limit", std::to_string(options.n_limit)},
                              {"modulus", std::to_string(options.scan_modulus)},
                              {"table_n_max", std::to_string(top)}};
    for (const auto &p : planned) {
        report.runs.push_back(run_from_claim(check_claim(p.claim, table, p.n_limit)));
    }
    for (const auto &f : families) {
        report.runs.push_back(run_from_step(verify_family(f.k, table, f.n_limit), RunKind::claim));
    }
    report.meta.wall_time = clock.seconds();
    return report;
}

struct ProveOptions {
    std::size_t order = 400;
    // n-limit of the oracle scan ped(9n+7) == ped(225n+178); defaults to `order`
    std::optional<std::uint64_t> oracle_n_limit;
};

/// Runs the full proof-step chain at the given order, followed by the oracle
/// scan of the self-similarity congruence.
inline VerificationReport cmd_prove(const ProveOptions &options)
{
    const detail::Stopwatch clock;
    VerificationReport report;
    const auto oracle_n = options.oracle_n_limit.value_or(options.order);
    report.meta.parameters = {{"command", "prove"},
                              {"order", std::to_string(options.order)},
                              {"oracle_n_limit", std::to_string(oracle_n)}};
    if (options.order == 0) {
        report.meta.warnings.push_back("order 0: every series comparison is empty, passes are vacuous");
    }
    for (const auto &step : proof_chain(options.order)) {
        report.runs.push_back(run_from_step(step));
    }
    const auto table = ped_table(detail::max_index(225, 178, oracle_n), ModDomain{24});
    report.runs.push_back(run_from_step(verify_self_similarity_oracle(table, oracle_n), RunKind::claim));
    report.meta.wall_time = clock.seconds();
    return report;
}

enum class TableFormat { text, json };

/// Writes ped(0..n_max), exact or reduced mod `modulus`.
inline void cmd_table(std::ostream &os, std::size_t n_max, TableFormat format,
                      std::optional<std::uint64_t> modulus = std::nullopt)
{
    if (format == TableFormat::text) {
        if (modulus) {
            write_table_text(os, ped_table(n_max, ModDomain{*modulus}));
        } else {
            write_table_text(os, ped_table(n_max));
        }
        return;
    }
    nlohmann::json j;
    j["n_max"] = n_max;
    if (modulus) {
        j["domain"] = "mod";
        j["modulus"] = *modulus;
        auto values = nlohmann::json::array();
        for (const auto &v : ped_table(n_max, ModDomain{*modulus}).values()) {
            values.push_back(v.residue());
        }
        j["values"] = std::move(values);
    } else {
        j["domain"] = "exact";
        j["modulus"] = nullptr;
        // decimal strings: exact values outgrow 64 bits from n = 1000 or so
        auto values = nlohmann::json::array();
        for (const auto &v : ped_table(n_max).values()) {
            values.push_back(v.str());
        }
        j["values"] = std::move(values);
    }
    os << j.dump() << '\n';
}

} // namespace pedlab
