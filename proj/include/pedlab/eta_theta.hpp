#pragma once

// Expansions of the products f_k = (q^k; q^k)_inf, eta quotients built from
// them, and Ramanujan's theta function f(a, b) at monomial arguments.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "series.hpp"

namespace pedlab {

/// (q^k; q^k)_inf to the given order via Euler's pentagonal number theorem:
/// sum over all integers n of (-1)^n q^(k n (3n+1)/2).
inline ExactSeries pochhammer(std::uint64_t k, std::size_t order)
{
    if (k == 0) {
        throw std::invalid_argument("pochhammer requires k >= 1");
    }
    std::vector<BigInt> cs(order, BigInt(0));
    for (std::uint64_t n = 0;; ++n) {
        const std::uint64_t e_pos = k * (n * (3 * n + 1) / 2);
        const std::uint64_t e_neg = k * (n * (3 * n - 1) / 2);
        if (e_neg >= order) {
            break;
        }
        const int sign = (n % 2 == 0) ? 1 : -1;
        cs[e_neg] += sign;
        if (n > 0 && e_pos < order) {
            cs[e_pos] += sign;
        }
    }
    return ExactSeries(std::move(cs));
}

/// Supplies the expansion of f_k to a requested order. The pipeline takes one
/// of these so tests can substitute a corrupted expansion.
using EtaSource = std::function<ExactSeries(std::uint64_t k, std::size_t order)>;

inline EtaSource pentagonal_source()
{
    return [](std::uint64_t k, std::size_t order) { return pochhammer(k, order); };
}

/// A finite product of powers f_k^e. Duplicate scales are merged and zero
/// exponents dropped, so two quotients denoting the same product compare equal.
class EtaQuotient {
public:
    EtaQuotient() = default;

    EtaQuotient(std::initializer_list<std::pair<std::uint64_t, std::int64_t>> factors)
    {
        for (const auto &[k, e] : factors) {
            multiply(k, e);
        }
    }

    explicit EtaQuotient(const std::vector<std::pair<std::uint64_t, std::int64_t>> &factors)
    {
        for (const auto &[k, e] : factors) {
            multiply(k, e);
        }
    }

    EtaQuotient &multiply(std::uint64_t k, std::int64_t e)
    {
        if (k == 0) {
            throw std::invalid_argument("eta quotient scale must be >= 1");
        }
        auto &slot = factors_[k];
        slot += e;
        if (slot == 0) {
            factors_.erase(k);
        }
        return *this;
    }

    const std::map<std::uint64_t, std::int64_t> &factors() const noexcept { return factors_; }

    /// Canonical text form, e.g. "f1^-11 * f2^4 * f3^6 * f4^1"; "1" when empty.
    std::string to_string() const
    {
        if (factors_.empty()) {
            return "1";
        }
        std::ostringstream os;
        bool first = true;
        for (const auto &[k, e] : factors_) {
            os << (first ? "" : " * ") << 'f' << k << '^' << e;
            first = false;
        }
        return os.str();
    }

    static EtaQuotient parse(const std::string &text)
    {
        EtaQuotient q;
        std::istringstream in(text);
        std::string tok;
        bool expect_factor = true;
        while (in >> tok) {
            if (!expect_factor) {
                if (tok != "*") {
                    throw std::invalid_argument("expected '*' in eta quotient, got '" + tok + "'");
                }
                expect_factor = true;
                continue;
            }
            if (tok == "1") {
                expect_factor = false;
                continue;
            }
            const auto caret = tok.find('^');
            if (tok.size() < 2 || tok[0] != 'f' || caret == std::string::npos) {
                throw std::invalid_argument("malformed eta factor '" + tok + "'");
            }
            std::size_t used_k = 0, used_e = 0;
            const auto ks = tok.substr(1, caret - 1);
            const auto es = tok.substr(caret + 1);
            try {
                const auto k = std::stoull(ks, &used_k);
                const auto e = std::stoll(es, &used_e);
                if (used_k != ks.size() || used_e != es.size()) {
                    throw std::invalid_argument("trailing characters");
                }
                q.multiply(k, e);
            } catch (const std::exception &) {
                throw std::invalid_argument("malformed eta factor '" + tok + "'");
            }
            expect_factor = false;
        }
        if (expect_factor && !q.factors_.empty()) {
            throw std::invalid_argument("eta quotient ends with '*'");
        }
        return q;
    }

    bool operator==(const EtaQuotient &) const = default;

private:
    std::map<std::uint64_t, std::int64_t> factors_;
};

inline ExactSeries eta_quotient(const EtaQuotient &spec, std::size_t order, const EtaSource &source)
{
    auto result = ExactSeries::one(order);
    for (const auto &[k, e] : spec.factors()) {
        result = mul(result, pow(source(k, order), e));
    }
    return result;
}

inline ExactSeries eta_quotient(const EtaQuotient &spec, std::size_t order)
{
    return eta_quotient(spec, order, pentagonal_source());
}

/// f(a, b) with a = q^r, b = q^s, or a = -q^r, b = -q^s when `negated`.
struct ThetaSpec {
    std::uint64_t r = 1;
    std::uint64_t s = 1;
    bool negated = false;

    void validate() const
    {
        if (r == 0 || s == 0) {
            throw std::invalid_argument("theta arguments need positive exponents r, s");
        }
    }
};

/// Sum over all integers n of a^(n(n+1)/2) b^(n(n-1)/2).
inline ExactSeries theta_sum(const ThetaSpec &spec, std::size_t order)
{
    spec.validate();
    std::vector<BigInt> cs(order, BigInt(0));
    // n >= 0 and n < 0 handled separately; exponents grow monotonically in |n|
    auto exponent = [&](std::int64_t n) -> std::uint64_t {
        const auto tri_plus = static_cast<std::uint64_t>(n * (n + 1) / 2);
        const auto tri_minus = static_cast<std::uint64_t>(n * (n - 1) / 2);
        return spec.r * tri_plus + spec.s * tri_minus;
    };
    for (int dir : {1, -1}) {
        for (std::int64_t m = (dir == 1 ? 0 : 1);; ++m) {
            const std::int64_t n = dir * m;
            const auto e = exponent(n);
            if (e >= order) {
                break;
            }
            cs[e] += (spec.negated && (m % 2 == 1)) ? -1 : 1;
        }
    }
    return ExactSeries(std::move(cs));
}

/// phi(q) = f(q, q) = sum of q^(n^2) over all integers n.
inline ExactSeries phi(std::size_t order)
{
    return theta_sum({1, 1, false}, order);
}

/// psi(q) = f(q, q^3) = sum of q^(n(n+1)/2) over n >= 0.
inline ExactSeries psi(std::size_t order)
{
    return theta_sum({1, 3, false}, order);
}

/// Product over n >= 0 of (1 + c q^(base + step n)) truncated; c = +1 or -1.
inline ExactSeries progression_product(std::uint64_t base, std::uint64_t step, int c, std::size_t order)
{
    auto result = ExactSeries::one(order);
    if (step == 0) {
        throw std::invalid_argument("progression step must be positive");
    }
    for (std::uint64_t e = base; e < order; e += step) {
        if (e == 0) {
            throw std::invalid_argument("progression product with a constant factor");
        }
        // in-place multiplication by (1 + c q^e), highest degree first
        std::vector<BigInt> cs(result.coeffs().begin(), result.coeffs().end());
        for (std::size_t i = order; i-- > e;) {
            cs[i] += c * cs[i - e];
        }
        result = ExactSeries(std::move(cs));
    }
    return result;
}

/// Right-hand side of Jacobi's triple product for f(a, b):
/// (-a; ab)_inf (-b; ab)_inf (ab; ab)_inf.
inline ExactSeries triple_product(const ThetaSpec &spec, std::size_t order)
{
    spec.validate();
    const std::uint64_t ab = spec.r + spec.s;
    const int c = spec.negated ? -1 : 1;
    return progression_product(spec.r, ab, c, order) * progression_product(spec.s, ab, c, order)
           * progression_product(ab, ab, -1, order);
}

inline bool jacobi_triple_product_check(const ThetaSpec &spec, std::size_t order)
{
    return theta_sum(spec, order) == triple_product(spec, order);
}

} // namespace pedlab
