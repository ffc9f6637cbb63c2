#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace orbitlr {

bool is_prime(std::uint64_t n);

/// The prime field F_p with elements stored as canonical residues in [0, p).
class PrimeField {
public:
    using value_type = std::uint64_t;

    /// Throws InvalidArgument unless p is a prime below 2^31.
    explicit PrimeField(std::uint64_t p);

    std::uint64_t characteristic() const noexcept { return p_; }

    value_type zero() const noexcept { return 0; }
    value_type one() const noexcept { return 1; }
    value_type from_int(std::int64_t v) const noexcept {
        const auto p = static_cast<std::int64_t>(p_);
        return static_cast<value_type>(((v % p) + p) % p);
    }
    std::int64_t to_int(value_type v) const noexcept { return static_cast<std::int64_t>(v); }

    value_type add(value_type a, value_type b) const noexcept {
        const value_type s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
    value_type mul(value_type a, value_type b) const noexcept { return (a * b) % p_; }
    /// Multiplicative inverse of a nonzero element.
    value_type inv(value_type a) const;
    bool is_zero(value_type a) const noexcept { return a == 0; }

    std::string name() const { return "F_" + std::to_string(p_); }
    bool operator==(const PrimeField&) const = default;

private:
    std::uint64_t p_;
};

/// The rationals, with exact arbitrary-precision fractions.
class RationalField {
public:
    using value_type = boost::multiprecision::cpp_rational;

    std::uint64_t characteristic() const noexcept { return 0; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(std::int64_t v) const { return v; }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const;
    bool is_zero(const value_type& a) const { return a == 0; }

    std::string name() const { return "Q"; }
    bool operator==(const RationalField&) const = default;
};

}  // namespace orbitlr
