#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbitlr/field.hpp"
#include "orbitlr/matrix.hpp"
#include "orbitlr/matrixlab.hpp"
#include "orbitlr/partition.hpp"

namespace orbitlr {

/**
 * F_q^{|λ|} with the nilpotent operator T = jordan_matrix(λ): the module
 * ⊕ F_q[t]/(t^{λ_i}) with t acting by T. On the standard basis T is a shift
 * inside each block, T e_{s+k} = e_{s+k-1}, T e_s = 0 for a block starting at s.
 */
class FiniteModule {
public:
    /// Throws InvalidArgument unless q is prime.
    FiniteModule(Partition lambda, std::uint64_t q);

    const Partition& type() const noexcept { return lambda_; }
    std::uint64_t q() const noexcept { return field_.characteristic(); }
    const PrimeField& field() const noexcept { return field_; }
    std::size_t dimension() const noexcept { return static_cast<std::size_t>(lambda_.weight()); }

    ExactMatrix<PrimeField> operator_matrix() const { return jordan_matrix(lambda_, field_); }

    /// T·v for a coordinate vector v.
    std::vector<std::uint64_t> apply(const std::vector<std::uint64_t>& v) const;

private:
    Partition lambda_;
    PrimeField field_;
};

/// A subspace given by its reduced row echelon basis; equal subspaces compare equal.
struct Subspace {
    std::vector<std::vector<std::uint64_t>> basis;

    std::size_t dimension() const noexcept { return basis.size(); }
    bool operator==(const Subspace&) const = default;
};

/// Gaussian binomial [n choose k]_q, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(int n, int k, std::uint64_t q);

/// All T-invariant subspaces: every reduced echelon basis, filtered by invariance.
/// Throws BudgetExceeded when Σ_k [n choose k]_q exceeds `budget`.
std::vector<Subspace> invariant_subspaces(const FiniteModule& module, std::uint64_t budget = kDefaultBudget);

/// Jordan type of T restricted to an invariant subspace.
Partition submodule_type(const FiniteModule& module, const Subspace& sub);

/// Jordan type of T acting on the quotient by an invariant subspace.
Partition quotient_type(const FiniteModule& module, const Subspace& sub);

/**
 * Number of submodules N ⊂ M_γ over F_q with N ≅ M_α and M_γ/N ≅ M_β.
 * Candidates are the subspaces with T^{β_1} M_γ ⊆ N ⊆ ker T^{α_1}; both
 * bounds are necessary and are coordinate subspaces, so only the part of N
 * between them is enumerated. Throws WeightMismatch, and BudgetExceeded when
 * the candidate count exceeds `budget`.
 */
std::int64_t hall_number(const Partition& alpha, const Partition& beta, const Partition& gamma, std::uint64_t q,
                         std::uint64_t budget = kDefaultBudget);

/// G^γ_{α,β}(q) as integer coefficients of 1, q, q², ... with trailing zeros trimmed.
struct HallPolynomial {
    Partition alpha;
    Partition beta;
    Partition gamma;
    std::vector<std::int64_t> coeffs;

    bool is_zero() const noexcept { return coeffs.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    std::int64_t leading() const noexcept { return coeffs.empty() ? 0 : coeffs.back(); }
    std::int64_t evaluate(std::int64_t q) const;
    /// "q^2 + 2q + 1"; "0" for the zero polynomial.
    std::string to_string() const;

    bool operator==(const HallPolynomial&) const = default;
};

/// The first `count` primes.
std::vector<std::uint64_t> first_primes(std::size_t count);

/**
 * Interpolates hall_number at the first d+1 primes, d = max(0, n(γ)−n(α)−n(β)),
 * and confirms the result at the next prime. Throws WeightMismatch,
 * BudgetExceeded, NonIntegralInterpolation when a coefficient is not an
 * integer, and InconsistentInterpolation when the check point is off the curve.
 */
HallPolynomial hall_polynomial(const Partition& alpha, const Partition& beta, const Partition& gamma,
                               std::uint64_t budget = kDefaultBudget);

}  // namespace orbitlr
