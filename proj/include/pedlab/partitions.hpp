#pragma once

// Combinatorial ground truth for ped(n), the number of partitions of n whose
// even parts are distinct. Tables are filled by knapsack recurrences and
// never touch q-series arithmetic.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coeff.hpp"
#include "series.hpp"

namespace pedlab {

template <Coefficient C>
class PedTable {
public:
    using domain_type = typename coeff_traits<C>::domain_type;

    PedTable(std::vector<C> values, domain_type domain) : values_(std::move(values)), domain_(domain)
    {
        if (values_.empty()) {
            throw std::invalid_argument("a table holds at least ped(0)");
        }
    }

    std::size_t n_max() const noexcept { return values_.size() - 1; }
    const domain_type &domain() const noexcept { return domain_; }
    const std::vector<C> &values() const noexcept { return values_; }
    const C &operator[](std::size_t n) const { return values_.at(n); }

    /// The generating series sum ped(n) q^n, of order n_max + 1.
    Series<C> as_series() const { return Series<C>(values_, domain_); }

private:
    std::vector<C> values_;
    domain_type domain_;
};

namespace detail {

// v[n] += v[n - part] for n = part..N, ascending (part used any number of times).
// Blocks of length `part` carry no dependency inside, so each block is a
// straight vector add the compiler can widen.
inline void unbounded_step(std::uint32_t *v, std::size_t n_max, std::size_t part, std::uint32_t m)
{
    for (std::size_t lo = part; lo <= n_max; lo += part) {
        const std::size_t hi = std::min(lo + part, n_max + 1);
        std::uint32_t *__restrict dst = v + lo;
        const std::uint32_t *__restrict src = v + lo - part;
        for (std::size_t i = 0; i < hi - lo; ++i) {
            const std::uint32_t s = dst[i] + src[i];
            dst[i] = s >= m ? s - m : s;
        }
    }
}

// v[n] += v[n - part] for n = N..part, descending (part used at most once).
inline void bounded_step(std::uint32_t *v, std::size_t n_max, std::size_t part, std::uint32_t m)
{
    std::size_t hi = n_max + 1;
    while (hi > part) {
        const std::size_t lo = std::max(part, hi >= part ? hi - part : 0);
        std::uint32_t *__restrict dst = v + lo;
        const std::uint32_t *__restrict src = v + lo - part;
        for (std::size_t i = 0; i < hi - lo; ++i) {
            const std::uint32_t s = dst[i] + src[i];
            dst[i] = s >= m ? s - m : s;
        }
        hi = lo;
    }
}

inline std::vector<std::uint32_t> ped_residues(std::size_t n_max, std::uint32_t m)
{
    std::vector<std::uint32_t> v(n_max + 1, 0);
    v[0] = 1 % m;
    for (std::size_t part = 1; part <= n_max; part += 2) {
        unbounded_step(v.data(), n_max, part, m);
    }
    for (std::size_t part = 2; part <= n_max; part += 2) {
        bounded_step(v.data(), n_max, part, m);
    }
    return v;
}

inline void check_scan_modulus(std::uint64_t modulus)
{
    if (modulus < 2 || modulus > (1ULL << 31)) {
        throw std::invalid_argument("table modulus must lie in [2, 2^31], got " + std::to_string(modulus));
    }
}

} // namespace detail

/// Exact ped(0..n_max). Odd parts are added first with repetition, then
/// even parts at most once each.
inline PedTable<BigInt> ped_table(std::size_t n_max)
{
    std::vector<BigInt> v(n_max + 1, BigInt(0));
    v[0] = 1;
    for (std::size_t part = 1; part <= n_max; part += 2) {
        for (std::size_t n = part; n <= n_max; ++n) {
            v[n] += v[n - part];
        }
    }
    for (std::size_t part = 2; part <= n_max; part += 2) {
        for (std::size_t n = n_max; n >= part; --n) {
            v[n] += v[n - part];
        }
    }
    return PedTable<BigInt>(std::move(v), ExactDomain{});
}

/// ped(0..n_max) reduced modulo `domain.modulus`, same recurrence in word arithmetic.
inline PedTable<ModInt> ped_table(std::size_t n_max, ModDomain domain)
{
    detail::check_scan_modulus(domain.modulus);
    const auto raw = detail::ped_residues(n_max, static_cast<std::uint32_t>(domain.modulus));
    std::vector<ModInt> v;
    v.reserve(raw.size());
    for (auto r : raw) {
        v.emplace_back(r, domain.modulus);
    }
    return PedTable<ModInt>(std::move(v), domain);
}

/// Partitions of n into parts not divisible by 4, exact.
inline PedTable<BigInt> four_regular_table(std::size_t n_max)
{
    std::vector<BigInt> v(n_max + 1, BigInt(0));
    v[0] = 1;
    for (std::size_t part = 1; part <= n_max; ++part) {
        if (part % 4 == 0) {
            continue;
        }
        for (std::size_t n = part; n <= n_max; ++n) {
            v[n] += v[n - part];
        }
    }
    return PedTable<BigInt>(std::move(v), ExactDomain{});
}

/// Writes one "n<TAB>ped(n)" line per entry.
template <Coefficient C>
void write_table_text(std::ostream &os, const PedTable<C> &table)
{
    for (std::size_t n = 0; n <= table.n_max(); ++n) {
        os << n << '\t' << table[n] << '\n';
    }
}

enum class ClaimStatus { theorem, conjecture };

inline std::string to_string(ClaimStatus s)
{
    return s == ClaimStatus::theorem ? "theorem" : "conjecture";
}

/// ped(step n + offset) == 0 (mod modulus) for all n >= 0.
struct CongruenceClaim {
    std::uint64_t step = 1;
    std::uint64_t offset = 0;
    std::uint64_t modulus = 2;
    ClaimStatus status = ClaimStatus::theorem;
    std::string label;

    std::string describe() const
    {
        return "ped(" + std::to_string(step) + "n+" + std::to_string(offset) + ") == 0 (mod "
               + std::to_string(modulus) + ")";
    }

    bool operator==(const CongruenceClaim &) const = default;
};

enum class Outcome { pass, fail, empirical_pass };

inline std::string to_string(Outcome o)
{
    switch (o) {
    case Outcome::pass:
        return "pass";
    case Outcome::fail:
        return "fail";
    case Outcome::empirical_pass:
        return "empirical-pass";
    }
    return "fail";
}

struct Counterexample {
    std::uint64_t n;
    std::uint64_t residue;

    bool operator==(const Counterexample &) const = default;
};

struct ClaimResult {
    CongruenceClaim claim;
    std::uint64_t n_limit;
    Outcome outcome;
    std::optional<Counterexample> witness;
};

namespace detail {

inline std::uint64_t residue_mod(const BigInt &v, std::uint64_t m)
{
    return static_cast<std::uint64_t>(BigInt(v % m));
}

inline std::uint64_t residue_mod(const ModInt &v, std::uint64_t m)
{
    return v.residue() % m;
}

inline void check_table_domain(ExactDomain, std::uint64_t) {}

inline void check_table_domain(ModDomain d, std::uint64_t claim_modulus)
{
    if (claim_modulus == 0 || d.modulus % claim_modulus != 0) {
        throw std::invalid_argument("table modulus " + std::to_string(d.modulus)
                                    + " is not a multiple of claim modulus " + std::to_string(claim_modulus));
    }
}

inline std::uint64_t max_index(std::uint64_t step, std::uint64_t offset, std::uint64_t n_limit)
{
    if (step != 0 && n_limit > (UINT64_MAX - offset) / step) {
        throw std::overflow_error("progression index overflows 64 bits");
    }
    return step * n_limit + offset;
}

} // namespace detail

/// Scans n = 0..n_limit and reports the smallest counterexample, if any.
/// Conjecture claims that survive the scan are marked empirical, never proven.
template <Coefficient C>
ClaimResult check_claim(const CongruenceClaim &claim, const PedTable<C> &table, std::uint64_t n_limit)
{
    if (claim.modulus < 2) {
        throw std::invalid_argument("claim modulus must be >= 2");
    }
    detail::check_table_domain(table.domain(), claim.modulus);
    const auto top = detail::max_index(claim.step, claim.offset, n_limit);
    if (top > table.n_max()) {
        throw std::out_of_range("table reaches n = " + std::to_string(table.n_max()) + " but " + claim.describe()
                                + " needs n = " + std::to_string(top));
    }
    for (std::uint64_t n = 0; n <= n_limit; ++n) {
        const auto r = detail::residue_mod(table[claim.step * n + claim.offset], claim.modulus);
        if (r != 0) {
            return {claim, n_limit, Outcome::fail, Counterexample{n, r}};
        }
    }
    const auto ok = claim.status == ClaimStatus::conjecture ? Outcome::empirical_pass : Outcome::pass;
    return {claim, n_limit, ok, std::nullopt};
}

enum class FamilyKind { theorem_family, ahs_family_1, ahs_family_2, ahs_family_3 };

inline std::string to_string(FamilyKind k)
{
    switch (k) {
    case FamilyKind::theorem_family:
        return "theorem-family";
    case FamilyKind::ahs_family_1:
        return "ahs-family-1";
    case FamilyKind::ahs_family_2:
        return "ahs-family-2";
    case FamilyKind::ahs_family_3:
        return "ahs-family-3";
    }
    return "?";
}

inline FamilyKind parse_family_kind(const std::string &s)
{
    for (auto k : {FamilyKind::theorem_family, FamilyKind::ahs_family_1, FamilyKind::ahs_family_2,
                   FamilyKind::ahs_family_3}) {
        if (to_string(k) == s) {
            return k;
        }
    }
    throw std::invalid_argument("unknown family kind '" + s + "'");
}

struct Progression {
    std::uint64_t step;
    std::uint64_t offset;
    std::uint64_t modulus;

    bool operator==(const Progression &) const = default;
};

namespace detail {

inline BigInt big_pow(std::uint64_t base, std::uint64_t e)
{
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e));
}

inline std::uint64_t to_u64(const BigInt &v)
{
    if (v < 0 || v > BigInt(UINT64_MAX)) {
        throw std::overflow_error("progression parameter " + v.str() + " does not fit 64 bits");
    }
    return static_cast<std::uint64_t>(v);
}

inline BigInt exact_div8(const BigInt &num)
{
    if (num % 8 != 0) {
        throw std::logic_error("offset numerator " + num.str() + " is not divisible by 8");
    }
    return num / 8;
}

} // namespace detail

/// Step, offset and modulus of the infinite congruence families, k >= 1.
///   theorem-family: ped(9n+7) == ped(9*5^(2k) n + (57*5^(2k)-1)/8) (mod 24)
///   ahs-family-1:   ped(3^(2k+2) n + (11*3^(2k+1)-1)/8) == 0 (mod 2)
///   ahs-family-2:   ped(3^(2k+1) n + (17*3^(2k)-1)/8)   == 0 (mod 6)
///   ahs-family-3:   ped(3^(2k+2) n + (19*3^(2k+1)-1)/8) == 0 (mod 6)
inline Progression family_offset(FamilyKind kind, std::uint64_t k)
{
    if (k < 1) {
        throw std::invalid_argument("family parameter must be >= 1");
    }
    if (k > 1000) {
        throw std::overflow_error("family parameter too large");
    }
    using detail::big_pow;
    using detail::exact_div8;
    using detail::to_u64;
    switch (kind) {
    case FamilyKind::theorem_family: {
        const BigInt p = big_pow(5, 2 * k);
        return {to_u64(9 * p), to_u64(exact_div8(57 * p - 1)), 24};
    }
    case FamilyKind::ahs_family_1:
        return {to_u64(big_pow(3, 2 * k + 2)), to_u64(exact_div8(11 * big_pow(3, 2 * k + 1) - 1)), 2};
    case FamilyKind::ahs_family_2:
        return {to_u64(big_pow(3, 2 * k + 1)), to_u64(exact_div8(17 * big_pow(3, 2 * k) - 1)), 6};
    case FamilyKind::ahs_family_3:
        return {to_u64(big_pow(3, 2 * k + 2)), to_u64(exact_div8(19 * big_pow(3, 2 * k + 1) - 1)), 6};
    }
    throw std::invalid_argument("unknown family kind");
}

/// Offset after k iterations of n -> 25n + 19 inside 9n + 7:
/// 9*19*(1 + 25 + ... + 25^(k-1)) + 7.
inline BigInt iterated_family_offset(std::uint64_t k)
{
    BigInt sum = 0;
    BigInt p = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        sum += p;
        p *= 25;
    }
    return 9 * 19 * sum + 7;
}

} // namespace pedlab
