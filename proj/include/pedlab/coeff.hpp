#pragma once

// Coefficient domains for truncated power series: exact integers and
// residues modulo a single machine-word modulus.

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pedlab {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when two values from different coefficient domains meet.
class domain_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an inverse is requested for a non-unit.
class non_unit_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ModInt {
public:
    ModInt(std::uint64_t value, std::uint64_t modulus)
        : residue_(0), modulus_(modulus)
    {
        if (modulus < 2) {
            throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(modulus));
        }
        residue_ = value % modulus;
    }

    static ModInt from_signed(std::int64_t value, std::uint64_t modulus)
    {
        if (value >= 0) {
            return ModInt(static_cast<std::uint64_t>(value), modulus);
        }
        // -(value) without overflow for INT64_MIN
        const std::uint64_t mag = static_cast<std::uint64_t>(-(value + 1)) + 1;
        const std::uint64_t r = mag % modulus;
        return ModInt(r == 0 ? 0 : modulus - r, modulus);
    }

    static ModInt from_big(const BigInt &value, std::uint64_t modulus)
    {
        if (modulus < 2) {
            throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(modulus));
        }
        BigInt r = value % modulus;
        if (r < 0) {
            r += modulus;
        }
        return ModInt(static_cast<std::uint64_t>(r), modulus);
    }

    std::uint64_t residue() const noexcept { return residue_; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    ModInt operator+(const ModInt &rhs) const
    {
        check(rhs);
        std::uint64_t s = residue_ + rhs.residue_;
        if (s >= modulus_ || s < residue_) {
            s -= modulus_;
        }
        return raw(s, modulus_);
    }

    ModInt operator-(const ModInt &rhs) const
    {
        check(rhs);
        return raw(residue_ >= rhs.residue_ ? residue_ - rhs.residue_ : modulus_ - (rhs.residue_ - residue_),
                   modulus_);
    }

    ModInt operator*(const ModInt &rhs) const
    {
        check(rhs);
        const auto p = static_cast<unsigned __int128>(residue_) * rhs.residue_;
        return raw(static_cast<std::uint64_t>(p % modulus_), modulus_);
    }

    ModInt operator-() const { return raw(residue_ == 0 ? 0 : modulus_ - residue_, modulus_); }

    ModInt &operator+=(const ModInt &rhs) { return *this = *this + rhs; }
    ModInt &operator-=(const ModInt &rhs) { return *this = *this - rhs; }
    ModInt &operator*=(const ModInt &rhs) { return *this = *this * rhs; }

    bool operator==(const ModInt &rhs) const noexcept = default;

    bool is_unit() const noexcept { return gcd(residue_, modulus_) == 1; }

    ModInt inverse() const
    {
        // extended Euclid on signed 128-bit to keep the Bezout coefficients exact
        __int128 old_r = residue_, r = modulus_;
        __int128 old_s = 1, s = 0;
        while (r != 0) {
            const __int128 q = old_r / r;
            const __int128 tr = old_r - q * r;
            old_r = r;
            r = tr;
            const __int128 ts = old_s - q * s;
            old_s = s;
            s = ts;
        }
        if (old_r != 1) {
            throw non_unit_error(std::to_string(residue_) + " is not invertible modulo " + std::to_string(modulus_));
        }
        __int128 inv = old_s % static_cast<__int128>(modulus_);
        if (inv < 0) {
            inv += modulus_;
        }
        return raw(static_cast<std::uint64_t>(inv), modulus_);
    }

private:
    static ModInt raw(std::uint64_t r, std::uint64_t m) noexcept
    {
        ModInt out;
        out.residue_ = r;
        out.modulus_ = m;
        return out;
    }

    ModInt() = default;

    void check(const ModInt &rhs) const
    {
        if (modulus_ != rhs.modulus_) {
            throw domain_mismatch("modulus mismatch: " + std::to_string(modulus_) + " vs "
                                  + std::to_string(rhs.modulus_));
        }
    }

    static std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept
    {
        while (b != 0) {
            const std::uint64_t t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    std::uint64_t residue_ = 0;
    std::uint64_t modulus_ = 2;
};

struct ExactDomain {
    bool operator==(const ExactDomain &) const noexcept = default;
};

struct ModDomain {
    std::uint64_t modulus;
    bool operator==(const ModDomain &) const noexcept = default;
};

template <typename C>
struct coeff_traits;

template <>
struct coeff_traits<BigInt> {
    using domain_type = ExactDomain;

    static BigInt zero(ExactDomain) { return BigInt(0); }
    static BigInt one(ExactDomain) { return BigInt(1); }
    static BigInt from_int(std::int64_t v, ExactDomain) { return BigInt(v); }
    static ExactDomain domain_of(const BigInt &) { return {}; }
    static bool is_zero(const BigInt &c) { return c.is_zero(); }
    static bool is_unit(const BigInt &c) { return c == 1 || c == -1; }
    static BigInt unit_inverse(const BigInt &c)
    {
        if (!is_unit(c)) {
            throw non_unit_error("constant term " + c.str() + " is not a unit in the integers");
        }
        return c;
    }
    static std::string describe(ExactDomain) { return "exact"; }
};

template <>
struct coeff_traits<ModInt> {
    using domain_type = ModDomain;

    static ModInt zero(ModDomain d) { return ModInt(0, d.modulus); }
    static ModInt one(ModDomain d) { return ModInt(1, d.modulus); }
    static ModInt from_int(std::int64_t v, ModDomain d) { return ModInt::from_signed(v, d.modulus); }
    static ModDomain domain_of(const ModInt &c) { return {c.modulus()}; }
    static bool is_zero(const ModInt &c) { return c.residue() == 0; }
    static bool is_unit(const ModInt &c) { return c.is_unit(); }
    static ModInt unit_inverse(const ModInt &c) { return c.inverse(); }
    static std::string describe(ModDomain d) { return "mod " + std::to_string(d.modulus); }
};

template <typename C>
concept Coefficient = requires(const C &a, const C &b) {
    typename coeff_traits<C>::domain_type;
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { a == b } -> std::convertible_to<bool>;
};

} // namespace pedlab
