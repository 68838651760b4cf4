#pragma once

// Verification reports: one run per checked claim or proof step, plus run
// metadata. Serialized as JSON ({"meta": ..., "runs": [...]}) and as text.

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dissection.hpp"
#include "partitions.hpp"

namespace pedlab {

inline constexpr const char *tool_version = "0.1.0";

enum class RunKind { claim, proof_step };

inline std::string to_string(RunKind k)
{
    return k == RunKind::claim ? "claim" : "proof-step";
}

struct Witness {
    std::uint64_t n;
    // decimal; for exact proof steps the difference may exceed 64 bits
    std::string residue;

    bool operator==(const Witness &) const = default;
};

struct Run {
    std::string label;
    RunKind kind = RunKind::claim;
    Outcome status = Outcome::pass;
    // n_limit for claims, truncation order for proof steps
    std::uint64_t range = 0;
    std::optional<std::uint64_t> modulus;
    std::optional<ClaimStatus> claim_status;
    std::optional<Witness> witness;
    std::string note;

    bool operator==(const Run &) const = default;
};

struct ReportMeta {
    std::string tool_version = pedlab::tool_version;
    double wall_time = 0.0;
    std::map<std::string, std::string> parameters;
    std::vector<std::string> warnings;

    bool operator==(const ReportMeta &) const = default;
};

struct VerificationReport {
    ReportMeta meta;
    std::vector<Run> runs;

    bool operator==(const VerificationReport &) const = default;
};

/// Throws std::invalid_argument if a run breaks the report invariants.
inline void validate(const Run &run)
{
    if (run.status == Outcome::fail && !run.witness) {
        throw std::invalid_argument("failed run '" + run.label + "' has no witness");
    }
    if (run.claim_status == ClaimStatus::conjecture && run.status == Outcome::pass) {
        throw std::invalid_argument("conjecture run '" + run.label + "' cannot be marked proven");
    }
}

inline void validate(const VerificationReport &report)
{
    for (const auto &run : report.runs) {
        validate(run);
    }
}

inline Run run_from_claim(const ClaimResult &result)
{
    Run run;
    run.label = result.claim.label.empty() ? result.claim.describe() : result.claim.label;
    run.kind = RunKind::claim;
    run.status = result.outcome;
    run.range = result.n_limit;
    run.modulus = result.claim.modulus;
    run.claim_status = result.claim.status;
    if (result.witness) {
        run.witness = Witness{result.witness->n, std::to_string(result.witness->residue)};
    }
    if (result.claim.status == ClaimStatus::conjecture && result.outcome == Outcome::empirical_pass) {
        run.note = "empirically verified up to n = " + std::to_string(result.n_limit) + ", not proven";
    }
    return run;
}

/// A proof step, or an oracle equivalence scan expressed as one. For claim
/// runs `range` is the largest n checked; for proof steps it is the order.
inline Run run_from_step(const ProofStep &step, RunKind kind = RunKind::proof_step)
{
    Run run;
    run.label = step.label;
    run.kind = kind;
    run.modulus = step.modulus;
    run.note = step.note;
    if (kind == RunKind::claim) {
        run.claim_status = ClaimStatus::theorem;
        run.range = step.order() == 0 ? 0 : step.order() - 1;
    } else {
        run.range = step.order();
    }
    if (const auto failure = step.first_failure()) {
        run.status = Outcome::fail;
        run.witness = Witness{failure->exponent, failure->difference.str()};
    } else {
        run.status = Outcome::pass;
    }
    return run;
}

/// Nonzero iff a theorem claim or a proof step failed. Conjectures never
/// affect the exit status.
inline int exit_code(const VerificationReport &report)
{
    for (const auto &run : report.runs) {
        if (run.status != Outcome::fail) {
            continue;
        }
        if (run.kind == RunKind::proof_step || run.claim_status != ClaimStatus::conjecture) {
            return 1;
        }
    }
    return 0;
}

namespace detail {

inline Outcome parse_outcome(const std::string &s)
{
    for (auto o : {Outcome::pass, Outcome::fail, Outcome::empirical_pass}) {
        if (to_string(o) == s) {
            return o;
        }
    }
    throw std::invalid_argument("unknown run status '" + s + "'");
}

inline RunKind parse_run_kind(const std::string &s)
{
    if (s == "claim") {
        return RunKind::claim;
    }
    if (s == "proof-step") {
        return RunKind::proof_step;
    }
    throw std::invalid_argument("unknown run kind '" + s + "'");
}

inline ClaimStatus parse_claim_status(const std::string &s)
{
    if (s == "theorem") {
        return ClaimStatus::theorem;
    }
    if (s == "conjecture") {
        return ClaimStatus::conjecture;
    }
    throw std::invalid_argument("unknown claim status '" + s + "'");
}

} // namespace detail

inline void to_json(nlohmann::json &j, const Witness &w)
{
    j = nlohmann::json{{"n", w.n}, {"residue", w.residue}};
}

inline void from_json(const nlohmann::json &j, Witness &w)
{
    j.at("n").get_to(w.n);
    j.at("residue").get_to(w.residue);
}

inline void to_json(nlohmann::json &j, const Run &r)
{
    j = nlohmann::json{{"label", r.label},
                       {"kind", to_string(r.kind)},
                       {"status", to_string(r.status)},
                       {"range", r.range},
                       {"modulus", r.modulus ? nlohmann::json(*r.modulus) : nlohmann::json(nullptr)},
                       {"claim_status", r.claim_status ? nlohmann::json(to_string(*r.claim_status))
                                                       : nlohmann::json(nullptr)},
                       {"witness", r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr)},
                       {"note", r.note}};
}

inline void from_json(const nlohmann::json &j, Run &r)
{
    j.at("label").get_to(r.label);
    r.kind = detail::parse_run_kind(j.at("kind").get<std::string>());
    r.status = detail::parse_outcome(j.at("status").get<std::string>());
    j.at("range").get_to(r.range);
    r.modulus = j.at("modulus").is_null() ? std::nullopt : std::optional(j.at("modulus").get<std::uint64_t>());
    r.claim_status = j.at("claim_status").is_null()
                         ? std::nullopt
                         : std::optional(detail::parse_claim_status(j.at("claim_status").get<std::string>()));
    r.witness = j.at("witness").is_null() ? std::nullopt : std::optional(j.at("witness").get<Witness>());
    j.at("note").get_to(r.note);
    validate(r);
}

inline void to_json(nlohmann::json &j, const ReportMeta &m)
{
    j = nlohmann::json{{"tool_version", m.tool_version},
                       {"wall_time", m.wall_time},
                       {"parameters", m.parameters},
                       {"warnings", m.warnings}};
}

inline void from_json(const nlohmann::json &j, ReportMeta &m)
{
    j.at("tool_version").get_to(m.tool_version);
    j.at("wall_time").get_to(m.wall_time);
    j.at("parameters").get_to(m.parameters);
    j.at("warnings").get_to(m.warnings);
}

inline void to_json(nlohmann::json &j, const VerificationReport &r)
{
    j = nlohmann::json{{"meta", r.meta}, {"runs", r.runs}};
}

inline void from_json(const nlohmann::json &j, VerificationReport &r)
{
    j.at("meta").get_to(r.meta);
    j.at("runs").get_to(r.runs);
}

inline std::string to_json_text(const VerificationReport &report)
{
    return nlohmann::json(report).dump(2);
}

inline VerificationReport parse_report(const std::string &text)
{
    return nlohmann::json::parse(text).get<VerificationReport>();
}

inline void render_text(std::ostream &os, const VerificationReport &report)
{
    for (const auto &w : report.meta.warnings) {
        os << "warning: " << w << '\n';
    }
    for (const auto &run : report.runs) {
        std::string tag = to_string(run.status);
        for (auto &c : tag) {
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        }
        os << '[' << tag << "] " << run.label;
        if (run.kind == RunKind::claim) {
            os << "  (0 <= n <= " << run.range << ")";
        } else {
            os << "  (verified to order " << run.range
               << (run.modulus ? ", mod " + std::to_string(*run.modulus) : std::string(", exact")) << ")";
        }
        if (run.witness) {
            os << "  witness: n = " << run.witness->n << ", residue " << run.witness->residue;
        }
        if (!run.note.empty()) {
            os << "  -- " << run.note;
        }
        os << '\n';
    }
    std::size_t failed = 0;
    for (const auto &run : report.runs) {
        failed += run.status == Outcome::fail ? 1 : 0;
    }
    os << report.runs.size() << " checks, " << failed << " failed; finite-range verification, not a proof ("
       << report.meta.wall_time << " s)\n";
}

} // namespace pedlab
