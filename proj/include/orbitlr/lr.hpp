#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "orbitlr/partition.hpp"

namespace orbitlr {

/// A finite sum  Σ c_γ s_γ  with positive integer coefficients over partitions of one weight.
class SchurExpansion {
public:
    SchurExpansion() = default;

    /// Adds `coefficient` to the term of `gamma`; zero-sum terms are dropped.
    /// Throws WeightMismatch if gamma's weight differs from existing keys.
    void add(const Partition& gamma, std::int64_t coefficient);

    std::int64_t coefficient(const Partition& gamma) const;
    const std::map<Partition, std::int64_t>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    bool operator==(const SchurExpansion&) const = default;

private:
    std::map<Partition, std::int64_t> terms_;
};

/// c^γ_{α,β}: the number of LR tableaux of shape γ/α and content β, or 0 when
/// α ⊄ γ or the weights do not add up.
std::int64_t lr_coeff(const Partition& alpha, const Partition& beta, const Partition& gamma);

/// s_α·s_β by the tableau rule: lr_coeff over every γ ⊢ |α|+|β| containing α and β.
SchurExpansion lr_expand_product(const Partition& alpha, const Partition& beta);

/**
 * s_α·s_β computed on characters in k = |α|+|β| variables, independently of
 * the tableau rule: the product's coefficients at dominant monomials are
 * accumulated from Kostka numbers, then Schur terms are peeled off by
 * repeatedly subtracting c·s_μ for the lexicographically greatest monomial x^μ.
 */
SchurExpansion schur_expand_product(const Partition& alpha, const Partition& beta);

/// Number of semistandard tableaux of shape lambda with content `weights`
/// (any composition), counted by stripping horizontal strips.
std::int64_t kostka_number(const Partition& lambda, std::span<const int> weights);

/// N^γ_{α_1..α_r}: the coefficient of s_γ in s_{α_1}⋯s_{α_r}, evaluated left to
/// right by dynamic programming over intermediate expansions.
/// Throws WeightMismatch when the block weights do not sum to |γ|.
std::int64_t chain_coeff(std::span<const Partition> blocks, const Partition& gamma);

}  // namespace orbitlr
