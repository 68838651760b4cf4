#pragma once

// Claim files and the built-in claim sets.
//
// Format: UTF-8 text, '#' starts a comment, blank lines ignored. Each
// remaining line is either
//
//     A B M theorem|conjecture label...     ped(A n + B) == 0 (mod M)
//     family KIND KMIN KMAX [NCAP]          an infinite family, parameters KMIN..KMAX
//
// where KIND is theorem-family, ahs-family-1, ahs-family-2 or ahs-family-3
// and NCAP optionally caps the n-limit used for that family.

#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "partitions.hpp"

namespace pedlab {

struct FamilyDirective {
    FamilyKind kind;
    std::uint64_t k_min;
    std::uint64_t k_max;
    std::optional<std::uint64_t> n_cap;

    bool operator==(const FamilyDirective &) const = default;
};

struct ClaimFile {
    std::vector<CongruenceClaim> claims;
    std::vector<FamilyDirective> families;

    bool empty() const noexcept { return claims.empty() && families.empty(); }

    ClaimFile &append(const ClaimFile &other)
    {
        claims.insert(claims.end(), other.claims.begin(), other.claims.end());
        families.insert(families.end(), other.families.begin(), other.families.end());
        return *this;
    }
};

class claim_parse_error : public std::runtime_error {
public:
    claim_parse_error(const std::string &source, std::size_t line, const std::string &what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what)
    {
    }
};

namespace detail {

inline std::optional<std::uint64_t> parse_u64(const std::string &tok)
{
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
        return std::nullopt;
    }
    try {
        return std::stoull(tok);
    } catch (const std::out_of_range &) {
        return std::nullopt;
    }
}

} // namespace detail

inline ClaimFile parse_claim_file(std::istream &in, const std::string &source = "<claims>")
{
    ClaimFile file;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) {
            toks.push_back(t);
        }
        if (toks.empty()) {
            continue;
        }
        auto need_u64 = [&](std::size_t i, const char *what) {
            const auto v = detail::parse_u64(toks[i]);
            if (!v) {
                throw claim_parse_error(source, lineno, std::string("expected ") + what + ", got '" + toks[i] + "'");
            }
            return *v;
        };
        if (toks[0] == "family") {
            if (toks.size() < 4 || toks.size() > 5) {
                throw claim_parse_error(source, lineno, "family line takes KIND KMIN KMAX [NCAP]");
            }
            FamilyDirective d{};
            try {
                d.kind = parse_family_kind(toks[1]);
            } catch (const std::invalid_argument &e) {
                throw claim_parse_error(source, lineno, e.what());
            }
            d.k_min = need_u64(2, "KMIN");
            d.k_max = need_u64(3, "KMAX");
            if (d.k_min < 1 || d.k_max < d.k_min) {
                throw claim_parse_error(source, lineno, "family range needs 1 <= KMIN <= KMAX");
            }
            if (toks.size() == 5) {
                d.n_cap = need_u64(4, "NCAP");
            }
            file.families.push_back(d);
            continue;
        }
        if (toks.size() < 4) {
            throw claim_parse_error(source, lineno, "claim line takes A B M theorem|conjecture label...");
        }
        CongruenceClaim c;
        c.step = need_u64(0, "step A");
        c.offset = need_u64(1, "offset B");
        c.modulus = need_u64(2, "modulus M");
        if (c.step < 1) {
            throw claim_parse_error(source, lineno, "step A must be >= 1");
        }
        if (c.modulus < 2) {
            throw claim_parse_error(source, lineno, "modulus M must be >= 2");
        }
        if (toks[3] == "theorem") {
            c.status = ClaimStatus::theorem;
        } else if (toks[3] == "conjecture") {
            c.status = ClaimStatus::conjecture;
        } else {
            throw claim_parse_error(source, lineno, "status must be theorem or conjecture, got '" + toks[3] + "'");
        }
        for (std::size_t i = 4; i < toks.size(); ++i) {
            c.label += (i > 4 ? " " : "") + toks[i];
        }
        file.claims.push_back(std::move(c));
    }
    if (file.empty()) {
        throw claim_parse_error(source, lineno, "claim file contains no claims");
    }
    return file;
}

inline ClaimFile load_claim_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open claim file '" + path + "'");
    }
    return parse_claim_file(in, path);
}

inline const std::vector<std::string> &builtin_set_names()
{
    static const std::vector<std::string> names{"ahs", "theorem1", "conjecture192", "all"};
    return names;
}

/// The known congruences for ped(n) as data.
///   ahs:           ped(3n+2), ped(9n+4), ped(9n+7) and the three 3-adic families at alpha = 1
///   theorem1:      ped(225n + {43, 88, 133, 223}) == 0 (mod 24) and the 25^k family, k = 1, 2
///   conjecture192: the same four progressions mod 192
inline ClaimFile builtin_claim_set(const std::string &name)
{
    static const char *ahs = R"(
3 2 2 theorem ped(3n+2) == 0 (mod 2)
9 4 4 theorem ped(9n+4) == 0 (mod 4)
9 7 12 theorem ped(9n+7) == 0 (mod 12)
family ahs-family-1 1 1
family ahs-family-2 1 1
family ahs-family-3 1 1
)";
    static const char *theorem1 = R"(
225 43 24 theorem ped(225n+43) == 0 (mod 24)
225 88 24 theorem ped(225n+88) == 0 (mod 24)
225 133 24 theorem ped(225n+133) == 0 (mod 24)
225 223 24 theorem ped(225n+223) == 0 (mod 24)
family theorem-family 1 1
# k = 2 reaches ped(5625n + 4453); n <= 10 keeps the table near 60k entries
family theorem-family 2 2 10
)";
    static const char *conjecture192 = R"(
225 43 192 conjecture ped(225n+43) == 0 (mod 192)
225 88 192 conjecture ped(225n+88) == 0 (mod 192)
225 133 192 conjecture ped(225n+133) == 0 (mod 192)
225 223 192 conjecture ped(225n+223) == 0 (mod 192)
)";
    auto parse = [&](const char *text) {
        std::istringstream in(text);
        return parse_claim_file(in, "builtin:" + name);
    };
    if (name == "ahs") {
        return parse(ahs);
    }
    if (name == "theorem1") {
        return parse(theorem1);
    }
    if (name == "conjecture192") {
        return parse(conjecture192);
    }
    if (name == "all") {
        return parse(ahs).append(parse(theorem1)).append(parse(conjecture192));
    }
    throw std::invalid_argument("unknown builtin claim set '" + name + "'");
}

} // namespace pedlab
