#pragma once

// Step-by-step numerical replay of the mod-24 congruences for ped(n).
//
// Each step is a ProofStep: two series that must agree exactly, or agree
// modulo M, up to a stated truncation order. The chain is
//
//   Hirschhorn 5-dissection  f1 = f25 (R(q^5) - q - q^2 / R(q^5))
//   ped(9n+7) generating function  12 f2^4 f3^6 f4 / f1^11
//   reduction mod 24  12 f2^4 f3^6 f4 / f1^11 == 12 f1 f6 f12
//   q^(5n+4) extraction  -> 12 q^3 f5 f30 f60 (mod 24)
//   vanishing of the residues 0, 1, 2, 4 of that series (the four congruences)
//   q^(5n+3) extraction  -> 12 f1 f6 f12 again (self-similarity)
//
// plus oracle scans of ped(9n+7) == ped(225n+178) and its iterates.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eta_theta.hpp"
#include "partitions.hpp"
#include "series.hpp"

namespace pedlab {

/// First exponent at which two series disagree, with the difference
/// (reduced mod M for congruence steps).
struct StepFailure {
    std::size_t exponent;
    BigInt difference;

    bool operator==(const StepFailure &) const = default;
};

struct ProofStep {
    std::string label;
    ExactSeries lhs;
    ExactSeries rhs;
    std::optional<std::uint64_t> modulus;
    std::string note;

    std::size_t order() const { return std::min(lhs.order(), rhs.order()); }

    std::optional<StepFailure> first_failure() const
    {
        const std::size_t n = order();
        for (std::size_t i = 0; i < n; ++i) {
            BigInt d = lhs.coeffs()[i] - rhs.coeffs()[i];
            if (modulus) {
                d %= *modulus;
                if (d < 0) {
                    d += *modulus;
                }
            }
            if (!d.is_zero()) {
                return StepFailure{i, d};
            }
        }
        return std::nullopt;
    }

    bool passed() const { return !first_failure().has_value(); }
};

/// Product over n >= 0 with a + m n < order of (1 - q^(a + m n)).
inline ExactSeries shifted_pochhammer(std::uint64_t a, std::uint64_t m, std::size_t order)
{
    if (a == 0) {
        throw std::invalid_argument("shifted_pochhammer requires a >= 1");
    }
    if (m == 0) {
        throw std::invalid_argument("shifted_pochhammer requires m >= 1");
    }
    return progression_product(a, m, -1, order);
}

struct RSeries {
    ExactSeries r;
    ExactSeries r_inv;
};

/// R(q) = (q^2;q^5)(q^3;q^5) / ((q;q^5)(q^4;q^5)) and its reciprocal.
///
/// This is the orientation for which f1 = f25 (R(q^5) - q - q^2 / R(q^5))
/// holds. The reciprocal quotient (q;q^5)(q^4;q^5) / ((q^2;q^5)(q^3;q^5)),
/// available as `r_inv`, satisfies the identity only with R and 1/R swapped;
/// substituting it directly breaks the identity at q^5.
inline RSeries rogers_ramanujan(std::size_t order)
{
    if (order < 1) {
        throw std::invalid_argument("rogers_ramanujan requires order >= 1");
    }
    const auto outer = shifted_pochhammer(1, 5, order) * shifted_pochhammer(4, 5, order);
    const auto inner = shifted_pochhammer(2, 5, order) * shifted_pochhammer(3, 5, order);
    return {inner * invert(outer), outer * invert(inner)};
}

namespace detail {

inline ExactSeries monomial(std::size_t e, std::size_t order)
{
    return ExactSeries::monomial(e, order);
}

inline ExactSeries ped9n7_rhs(std::size_t order, const EtaSource &src)
{
    return scale(eta_quotient(EtaQuotient{{1, -11}, {2, 4}, {3, 6}, {4, 1}}, order, src), 12);
}

inline ExactSeries twelve_f1f6f12(std::size_t order, const EtaSource &src)
{
    return scale(eta_quotient(EtaQuotient{{1, 1}, {6, 1}, {12, 1}}, order, src), 12);
}

// 12 q^3 f5 f30 f60, known below q^order
inline ExactSeries twelve_q3_f5f30f60(std::size_t order, const EtaSource &src)
{
    if (order <= 3) {
        return ExactSeries::zero(order);
    }
    return shift(scale(eta_quotient(EtaQuotient{{5, 1}, {30, 1}, {60, 1}}, order - 3, src), 12), 3);
}

// f25 (R(q^5) - q - q^2 R(q^5)^{-1})
inline ExactSeries hirschhorn_form(std::size_t order, const EtaSource &src)
{
    const std::size_t inner = (order + 4) / 5;
    const auto rr = rogers_ramanujan(std::max<std::size_t>(inner, 1));
    const auto r5 = truncate(scale_exponent(rr.r, 5), order);
    const auto r5_inv = truncate(scale_exponent(rr.r_inv, 5), order);
    const auto bracket = r5 - monomial(1, order) - shift(truncate(r5_inv, order >= 2 ? order - 2 : 0), 2);
    return src(25, order) * bracket;
}

// Smallest source order whose m-dissection at r has the wanted order.
inline std::size_t source_order(std::size_t order, std::size_t m, std::size_t r)
{
    return order == 0 ? 0 : m * (order - 1) + r + 1;
}

} // namespace detail

/// f1 == f25 (R(q^5) - q - q^2 R(q^5)^{-1}), exact.
inline ProofStep verify_hirschhorn_dissection(std::size_t order, const EtaSource &src = pentagonal_source())
{
    return {"Hirschhorn 5-dissection of f1", src(1, order), detail::hirschhorn_form(order, src), std::nullopt,
            ""};
}

/// 12 f1 f6 f12 recomputed with f1 replaced by its 5-dissected form, exact.
inline ProofStep verify_lemma_substitution(std::size_t order, const EtaSource &src = pentagonal_source())
{
    const auto substituted =
        scale(detail::hirschhorn_form(order, src) * src(6, order) * src(12, order), 12);
    return {"12 f1 f6 f12 with f1 5-dissected", substituted, detail::twelve_f1f6f12(order, src), std::nullopt, ""};
}

/// sum ped(9n+7) q^n == 12 f2^4 f3^6 f4 / f1^11, exact. The left side comes
/// from the knapsack table, not from q-series.
inline ProofStep verify_ped9n7_generating_function(std::size_t order, const EtaSource &src = pentagonal_source())
{
    const auto table = ped_table(detail::source_order(order, 9, 7));
    auto lhs = order == 0 ? ExactSeries::zero(0) : dissect(table.as_series(), 9, 7);
    return {"generating function of ped(9n+7)", std::move(lhs), detail::ped9n7_rhs(order, src), std::nullopt, ""};
}

/// 12 f2^4 f3^6 f4 / f1^11 == 0 (mod 12), i.e. ped(9n+7) == 0 (mod 12).
inline ProofStep verify_ped9n7_mod12(std::size_t order, const EtaSource &src = pentagonal_source())
{
    return {"ped(9n+7) == 0 (mod 12)", detail::ped9n7_rhs(order, src), ExactSeries::zero(order), 12, ""};
}

/// 12 f2^4 f3^6 f4 / f1^11 == 12 f1 f6 f12 (mod `modulus`); the identity holds for 24.
inline ProofStep verify_mod24_reduction(std::size_t order, const EtaSource &src = pentagonal_source(),
                                        std::uint64_t modulus = 24)
{
    return {"binomial reduction to 12 f1 f6 f12 (mod " + std::to_string(modulus) + ")",
            detail::ped9n7_rhs(order, src), detail::twelve_f1f6f12(order, src), modulus, ""};
}

/// The q^(5n+4) part of 12 f1 f6 f12, reduced mod 24, shifted down.
inline ModSeries extracted_5n4_series(std::size_t order, const EtaSource &src = pentagonal_source())
{
    const auto full = reduce_mod(detail::twelve_f1f6f12(detail::source_order(order, 5, 4), src), 24);
    return order == 0 ? ModSeries::zero(0, ModDomain{24}) : dissect(full, 5, 4);
}

/// sum ped(45n+43) q^n == 12 q^3 f5 f30 f60 (mod 24).
inline ProofStep verify_extraction_5n4(std::size_t order, const EtaSource &src = pentagonal_source())
{
    return {"q^(5n+4) extraction to 12 q^3 f5 f30 f60 (mod 24)", lift(extracted_5n4_series(order, src)),
            detail::twelve_q3_f5f30f60(order, src), 24, ""};
}

/// Residue class j of the extracted series vanishes mod 24, which is
/// ped(225n + 45j + 43) == 0 (mod 24). Meaningful for j in {0, 1, 2, 4}.
inline ProofStep verify_extraction_residue(std::size_t order, std::size_t j, const EtaSource &src = pentagonal_source())
{
    if (j >= 5) {
        throw std::invalid_argument("residue must be below 5");
    }
    const auto inner = detail::source_order(order, 5, j);
    const auto part = inner == 0 ? ModSeries::zero(0, ModDomain{24}) : dissect(extracted_5n4_series(inner, src), 5, j);
    return {"ped(225n+" + std::to_string(45 * j + 43) + ") == 0 (mod 24), series level", lift(part),
            ExactSeries::zero(part.order()), 24, ""};
}

/// The q^(5n+3) part of 12 q^3 f5 f30 f60 is 12 f1 f6 f12 again (mod 24).
inline ProofStep verify_self_similarity(std::size_t order, const EtaSource &src = pentagonal_source())
{
    const auto full = reduce_mod(detail::twelve_q3_f5f30f60(detail::source_order(order, 5, 3), src), 24);
    auto lhs = order == 0 ? ExactSeries::zero(0) : lift(dissect(full, 5, 3));
    return {"q^(5n+3) extraction returns 12 f1 f6 f12 (mod 24)", std::move(lhs),
            lift(reduce_mod(detail::twelve_f1f6f12(order, src), 24)), 24, ""};
}

namespace detail {

// ped(step n + offset) for n = 0..n_limit as a series of order n_limit + 1
template <Coefficient C>
ExactSeries progression_series(const PedTable<C> &table, std::uint64_t step, std::uint64_t offset,
                               std::uint64_t n_limit)
{
    const auto top = max_index(step, offset, n_limit);
    if (top > table.n_max()) {
        throw std::out_of_range("table reaches n = " + std::to_string(table.n_max()) + ", need n = "
                                + std::to_string(top));
    }
    std::vector<BigInt> cs;
    cs.reserve(n_limit + 1);
    for (std::uint64_t n = 0; n <= n_limit; ++n) {
        if constexpr (std::same_as<C, ModInt>) {
            cs.emplace_back(table[step * n + offset].residue());
        } else {
            cs.emplace_back(table[step * n + offset]);
        }
    }
    return ExactSeries(std::move(cs));
}

template <Coefficient C>
void require_mod24_table(const PedTable<C> &table)
{
    if constexpr (std::same_as<C, ModInt>) {
        check_table_domain(table.domain(), 24);
    }
}

} // namespace detail

/// ped(9n+7) == ped(225n+178) (mod 24) for n = 0..n_limit, read off the table.
template <Coefficient C>
ProofStep verify_self_similarity_oracle(const PedTable<C> &table, std::uint64_t n_limit)
{
    detail::require_mod24_table(table);
    return {"ped(9n+7) == ped(225n+178) (mod 24), oracle", detail::progression_series(table, 9, 7, n_limit),
            detail::progression_series(table, 225, 178, n_limit), 24, ""};
}

/// ped(9n+7) == ped(9*25^k n + (57*25^k - 1)/8) (mod 24) for n = 0..n_limit,
/// read off the table. Also confirms the closed-form offset against the
/// iterated substitution n -> 25n + 19.
template <Coefficient C>
ProofStep verify_family(std::uint64_t k, const PedTable<C> &table, std::uint64_t n_limit)
{
    if (k < 1) {
        throw std::invalid_argument("family parameter k must be >= 1");
    }
    detail::require_mod24_table(table);
    const auto prog = family_offset(FamilyKind::theorem_family, k);
    if (BigInt(prog.offset) != iterated_family_offset(k)) {
        throw std::logic_error("closed-form family offset disagrees with the iterated substitution for k = "
                               + std::to_string(k));
    }
    return {"ped(9n+7) == ped(" + std::to_string(prog.step) + "n+" + std::to_string(prog.offset)
                + ") (mod 24), k = " + std::to_string(k),
            detail::progression_series(table, 9, 7, n_limit),
            detail::progression_series(table, prog.step, prog.offset, n_limit), 24, ""};
}

/// Every series-level step at the given order, in derivation order. A step
/// whose expansion cannot be formed (a non-unit constant term from a bad
/// eta source) is recorded as failing at q^0.
inline std::vector<ProofStep> proof_chain(std::size_t order, const EtaSource &src = pentagonal_source())
{
    std::vector<ProofStep> steps;
    auto run = [&](const std::string &label, auto &&build) {
        try {
            steps.push_back(build());
        } catch (const non_unit_error &e) {
            steps.push_back({label, ExactSeries::one(1), ExactSeries::zero(1), std::nullopt, e.what()});
        }
    };
    run("Hirschhorn 5-dissection of f1", [&] { return verify_hirschhorn_dissection(order, src); });
    run("12 f1 f6 f12 with f1 5-dissected", [&] { return verify_lemma_substitution(order, src); });
    run("generating function of ped(9n+7)", [&] { return verify_ped9n7_generating_function(order, src); });
    run("ped(9n+7) == 0 (mod 12)", [&] { return verify_ped9n7_mod12(order, src); });
    run("binomial reduction to 12 f1 f6 f12 (mod 24)", [&] { return verify_mod24_reduction(order, src); });
    run("q^(5n+4) extraction to 12 q^3 f5 f30 f60 (mod 24)", [&] { return verify_extraction_5n4(order, src); });
    for (std::size_t j : {0, 1, 2, 4}) {
        run("ped(225n+" + std::to_string(45 * j + 43) + ") == 0 (mod 24), series level",
            [&] { return verify_extraction_residue(order, j, src); });
    }
    run("q^(5n+3) extraction returns 12 f1 f6 f12 (mod 24)", [&] { return verify_self_similarity(order, src); });
    return steps;
}

} // namespace pedlab
