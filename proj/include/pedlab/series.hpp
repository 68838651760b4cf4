#pragma once

// Truncated formal power series in q over an exact or modular coefficient
// domain. A series of order N carries the coefficients of q^0 .. q^(N-1);
// nothing at or beyond q^N is known. Binary operations truncate to the
// smaller order of their operands and never extrapolate.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coeff.hpp"

namespace pedlab {

template <Coefficient C>
class Series {
public:
    using coeff_type = C;
    using traits = coeff_traits<C>;
    using domain_type = typename traits::domain_type;

    Series(std::vector<C> coeffs, domain_type domain) : coeffs_(std::move(coeffs)), domain_(domain)
    {
        for (const auto &c : coeffs_) {
            if (!(traits::domain_of(c) == domain_)) {
                throw domain_mismatch("coefficient outside series domain " + traits::describe(domain_));
            }
        }
    }

    explicit Series(std::vector<C> coeffs)
        requires std::same_as<domain_type, ExactDomain>
        : Series(std::move(coeffs), ExactDomain{})
    {
    }

    /// Series of the given order from small integer coefficients; missing
    /// trailing coefficients are zero.
    static Series from_ints(std::initializer_list<std::int64_t> values, std::size_t order, domain_type domain = {})
    {
        std::vector<C> cs(order, traits::zero(domain));
        std::size_t i = 0;
        for (auto v : values) {
            if (i >= order) {
                break;
            }
            cs[i++] = traits::from_int(v, domain);
        }
        return Series(std::move(cs), domain);
    }

    static Series zero(std::size_t order, domain_type domain = {})
    {
        return Series(std::vector<C>(order, traits::zero(domain)), domain);
    }

    static Series one(std::size_t order, domain_type domain = {})
    {
        return monomial(0, order, domain);
    }

    /// q^exponent, truncated (the zero series when exponent >= order).
    static Series monomial(std::size_t exponent, std::size_t order, domain_type domain = {})
    {
        auto s = zero(order, domain);
        if (exponent < order) {
            s.coeffs_[exponent] = traits::one(domain);
        }
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size(); }
    const domain_type &domain() const noexcept { return domain_; }
    std::span<const C> coeffs() const noexcept { return coeffs_; }

    const C &operator[](std::size_t n) const
    {
        if (n >= coeffs_.size()) {
            throw std::out_of_range("coefficient q^" + std::to_string(n) + " beyond truncation order "
                                    + std::to_string(coeffs_.size()));
        }
        return coeffs_[n];
    }

    /// Copy with one coefficient replaced.
    Series with_coeff(std::size_t n, C value) const
    {
        if (!(traits::domain_of(value) == domain_)) {
            throw domain_mismatch("coefficient outside series domain " + traits::describe(domain_));
        }
        Series out = *this;
        out.coeffs_.at(n) = std::move(value);
        return out;
    }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const C &c) { return traits::is_zero(c); });
    }

    bool operator==(const Series &rhs) const = default;

private:
    std::vector<C> coeffs_;
    domain_type domain_{};
};

using ExactSeries = Series<BigInt>;
using ModSeries = Series<ModInt>;

namespace detail {

template <Coefficient C>
void require_same_domain(const Series<C> &a, const Series<C> &b)
{
    using traits = coeff_traits<C>;
    if (!(a.domain() == b.domain())) {
        throw domain_mismatch("series domains differ: " + traits::describe(a.domain()) + " vs "
                              + traits::describe(b.domain()));
    }
}

} // namespace detail

template <Coefficient C>
Series<C> truncate(const Series<C> &a, std::size_t order)
{
    const auto cs = a.coeffs();
    return Series<C>(std::vector<C>(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(std::min(order, a.order()))),
                     a.domain());
}

template <Coefficient C>
Series<C> add(const Series<C> &a, const Series<C> &b)
{
    detail::require_same_domain(a, b);
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<C> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.emplace_back(a.coeffs()[i] + b.coeffs()[i]);
    }
    return Series<C>(std::move(out), a.domain());
}

template <Coefficient C>
Series<C> negate(const Series<C> &a)
{
    std::vector<C> out;
    out.reserve(a.order());
    for (const auto &c : a.coeffs()) {
        out.emplace_back(-c);
    }
    return Series<C>(std::move(out), a.domain());
}

template <Coefficient C>
Series<C> sub(const Series<C> &a, const Series<C> &b)
{
    detail::require_same_domain(a, b);
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<C> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.emplace_back(a.coeffs()[i] - b.coeffs()[i]);
    }
    return Series<C>(std::move(out), a.domain());
}

/// Multiply every coefficient by a constant of the same domain.
template <Coefficient C>
Series<C> scale(const Series<C> &a, const C &factor)
{
    std::vector<C> out;
    out.reserve(a.order());
    for (const auto &c : a.coeffs()) {
        out.emplace_back(c * factor);
    }
    return Series<C>(std::move(out), a.domain());
}

template <Coefficient C>
Series<C> scale(const Series<C> &a, std::int64_t factor)
{
    return scale(a, coeff_traits<C>::from_int(factor, a.domain()));
}

/// Schoolbook product truncated to the smaller operand order. Zero
/// coefficients of the left operand are skipped, which makes products with
/// sparse eta and theta expansions cheap.
template <Coefficient C>
Series<C> mul(const Series<C> &a, const Series<C> &b)
{
    using traits = coeff_traits<C>;
    detail::require_same_domain(a, b);
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<C> out(n, traits::zero(a.domain()));
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    // iterate over the sparser side
    std::size_t nnz_a = 0, nnz_b = 0;
    for (std::size_t i = 0; i < n; ++i) {
        nnz_a += traits::is_zero(ac[i]) ? 0 : 1;
        nnz_b += traits::is_zero(bc[i]) ? 0 : 1;
    }
    const auto outer = nnz_a <= nnz_b ? ac : bc;
    const auto inner = nnz_a <= nnz_b ? bc : ac;
    for (std::size_t i = 0; i < n; ++i) {
        if (traits::is_zero(outer[i])) {
            continue;
        }
        const C &x = outer[i];
        for (std::size_t j = 0; i + j < n; ++j) {
            if (!traits::is_zero(inner[j])) {
                out[i + j] += x * inner[j];
            }
        }
    }
    return Series<C>(std::move(out), a.domain());
}

/// Multiplicative inverse to the same order; the constant term must be a unit.
template <Coefficient C>
Series<C> invert(const Series<C> &a)
{
    using traits = coeff_traits<C>;
    const std::size_t n = a.order();
    if (n == 0) {
        return a;
    }
    const auto ac = a.coeffs();
    const C c0_inv = traits::unit_inverse(ac[0]);
    std::vector<std::size_t> support;
    for (std::size_t i = 1; i < n; ++i) {
        if (!traits::is_zero(ac[i])) {
            support.push_back(i);
        }
    }
    std::vector<C> out(n, traits::zero(a.domain()));
    out[0] = c0_inv;
    for (std::size_t k = 1; k < n; ++k) {
        C acc = traits::zero(a.domain());
        for (auto i : support) {
            if (i > k) {
                break;
            }
            acc += ac[i] * out[k - i];
        }
        out[k] = -(acc * c0_inv);
    }
    return Series<C>(std::move(out), a.domain());
}

/// a^e by repeated squaring; negative exponents invert first.
template <Coefficient C>
Series<C> pow(const Series<C> &a, std::int64_t e)
{
    if (e < 0) {
        const auto inv = invert(a);
        // |e| = -(e + 1) + 1 without overflow
        return mul(pow(inv, -(e + 1)), inv);
    }
    auto result = Series<C>::one(a.order(), a.domain());
    auto base = a;
    auto k = static_cast<std::uint64_t>(e);
    while (k > 0) {
        if (k & 1U) {
            result = mul(result, base);
        }
        k >>= 1U;
        if (k > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

/// Substitute q -> q^k. The result is known to order a.order() * k.
template <Coefficient C>
Series<C> scale_exponent(const Series<C> &a, std::size_t k)
{
    using traits = coeff_traits<C>;
    if (k == 0) {
        throw std::invalid_argument("scale_exponent requires k >= 1");
    }
    std::vector<C> out(a.order() * k, traits::zero(a.domain()));
    for (std::size_t i = 0; i < a.order(); ++i) {
        out[i * k] = a.coeffs()[i];
    }
    return Series<C>(std::move(out), a.domain());
}

/// Coefficients of q^(m n + r), re-indexed by n. The result order is
/// ceil((a.order() - r) / m), or zero when r >= a.order().
template <Coefficient C>
Series<C> dissect(const Series<C> &a, std::size_t m, std::size_t r)
{
    if (m == 0 || r >= m) {
        throw std::invalid_argument("dissect requires m >= 1 and 0 <= r < m");
    }
    std::vector<C> out;
    for (std::size_t i = r; i < a.order(); i += m) {
        out.push_back(a.coeffs()[i]);
    }
    return Series<C>(std::move(out), a.domain());
}

/// Multiply by q^s. A series known below q^N times q^s is known below q^(N+s).
template <Coefficient C>
Series<C> shift(const Series<C> &a, std::size_t s)
{
    using traits = coeff_traits<C>;
    std::vector<C> out(a.order() + s, traits::zero(a.domain()));
    std::copy(a.coeffs().begin(), a.coeffs().end(), out.begin() + static_cast<std::ptrdiff_t>(s));
    return Series<C>(std::move(out), a.domain());
}

inline ModSeries reduce_mod(const ExactSeries &a, std::uint64_t modulus)
{
    if (modulus < 2) {
        throw std::invalid_argument("reduce_mod requires modulus >= 2, got " + std::to_string(modulus));
    }
    std::vector<ModInt> out;
    out.reserve(a.order());
    for (const auto &c : a.coeffs()) {
        out.push_back(ModInt::from_big(c, modulus));
    }
    return ModSeries(std::move(out), ModDomain{modulus});
}

/// Canonical representatives in [0, M) as exact integers.
inline ExactSeries lift(const ModSeries &a)
{
    std::vector<BigInt> out;
    out.reserve(a.order());
    for (const auto &c : a.coeffs()) {
        out.emplace_back(c.residue());
    }
    return ExactSeries(std::move(out));
}

template <Coefficient C>
Series<C> operator+(const Series<C> &a, const Series<C> &b)
{
    return add(a, b);
}

template <Coefficient C>
Series<C> operator-(const Series<C> &a, const Series<C> &b)
{
    return sub(a, b);
}

template <Coefficient C>
Series<C> operator-(const Series<C> &a)
{
    return negate(a);
}

template <Coefficient C>
Series<C> operator*(const Series<C> &a, const Series<C> &b)
{
    return mul(a, b);
}

inline std::ostream &operator<<(std::ostream &os, const ModInt &c)
{
    return os << c.residue();
}

template <Coefficient C>
std::ostream &operator<<(std::ostream &os, const Series<C> &a)
{
    using traits = coeff_traits<C>;
    bool first = true;
    for (std::size_t i = 0; i < a.order(); ++i) {
        if (traits::is_zero(a.coeffs()[i])) {
            continue;
        }
        os << (first ? "" : " + ") << a.coeffs()[i];
        if (i > 0) {
            os << "*q^" << i;
        }
        first = false;
    }
    if (first) {
        os << "0";
    }
    return os << " + O(q^" << a.order() << ")";
}

} // namespace pedlab
