#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "orbitlr/error.hpp"
#include "orbitlr/matrix.hpp"
#include "orbitlr/partition.hpp"

namespace orbitlr {

/// Default cap on enumeration sizes (exhaustive blocks, candidate subspaces).
inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Block-diagonal nilpotent Jordan matrix, one block of size λ_i per part, ones on the superdiagonal.
template <class Field>
ExactMatrix<Field> jordan_matrix(const Partition& lambda, const Field& field) {
    ExactMatrix<Field> m(field, static_cast<std::size_t>(lambda.weight()));
    std::size_t start = 0;
    for (int part : lambda.parts()) {
        for (int k = 0; k + 1 < part; ++k)
            m(start + k, start + k + 1) = field.one();
        start += static_cast<std::size_t>(part);
    }
    return m;
}

/// Jordan type from the rank sequence: γ^t_k = rank(M^{k-1}) − rank(M^k).
/// Throws NotNilpotent if the ranks stall above zero.
template <class Field>
Partition jordan_type(const ExactMatrix<Field>& m) {
    std::vector<int> columns;
    std::size_t previous = m.dim();
    ExactMatrix<Field> power = m;
    while (previous > 0) {
        const std::size_t r = power.rank();
        if (r == previous)
            throw Error(ErrorKind::NotNilpotent, "rank stalls at " + std::to_string(r));
        columns.push_back(static_cast<int>(previous - r));
        previous = r;
        if (r > 0)
            power = power * m;
    }
    return conjugate(Partition(std::move(columns)));
}

/**
 * An element of J_{α,β} + n inside the parabolic with Levi GL(|α|)×GL(|β|):
 * jordan_matrix(α) and jordan_matrix(β) on the diagonal, `block` (row-major,
 * |α|×|β|) in the upper-right corner, zero below. Throws InvalidArgument if
 * the block has the wrong size.
 */
template <class Field>
ExactMatrix<Field> sample_parabolic_element(const Partition& alpha, const Partition& beta, const Field& field,
                                            std::span<const typename Field::value_type> block) {
    const auto a = static_cast<std::size_t>(alpha.weight());
    const auto b = static_cast<std::size_t>(beta.weight());
    if (block.size() != a * b)
        throw Error(ErrorKind::InvalidArgument, "upper-right block needs " + std::to_string(a * b) + " entries");
    auto m = direct_sum(jordan_matrix(alpha, field), jordan_matrix(beta, field));
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
            m(i, a + j) = block[i * b + j];
    return m;
}

/// Same, with the upper-right block drawn uniformly from F_p.
template <class Rng>
ExactMatrix<PrimeField> sample_parabolic_element(const Partition& alpha, const Partition& beta,
                                                 const PrimeField& field, Rng& rng) {
    std::uniform_int_distribution<std::uint64_t> entry(0, field.characteristic() - 1);
    std::vector<std::uint64_t> block(static_cast<std::size_t>(alpha.weight()) * beta.weight());
    for (auto& v : block)
        v = entry(rng);
    return sample_parabolic_element<PrimeField>(alpha, beta, field, block);
}

/// Every upper-right block over F_q.
struct ExhaustiveStrategy {
    std::uint64_t q = 2;
    bool operator==(const ExhaustiveStrategy&) const = default;
};

/// `samples` blocks with entries uniform in F_p; the stream is fixed by `seed`.
struct RandomStrategy {
    std::uint64_t p = 1009;
    std::uint64_t samples = 2000;
    std::uint64_t seed = 0;
    bool operator==(const RandomStrategy&) const = default;
};

using Strategy = std::variant<ExhaustiveStrategy, RandomStrategy>;

std::string describe(const Strategy& strategy);

enum class Verdict { Pass, Inconclusive, Fail };

std::string_view to_string(Verdict verdict);

/// Outcome of a Jordan-type census over elements of J_{α,β} + n.
struct MembershipReport {
    Partition alpha;
    Partition beta;
    std::vector<Strategy> strategies;
    std::vector<Partition> observed;
    std::vector<Partition> allowed;
    std::vector<Partition> missing;
    std::vector<Partition> violations;

    /// Fail on any violation; Inconclusive when something allowed was never observed.
    Verdict verdict() const;

    bool operator==(const MembershipReport&) const = default;
};

/**
 * Census of Jordan types of J_{α,β} + X over the upper-right blocks X chosen by
 * each strategy in turn; the observed sets are merged. `allowed` is the node
 * set of orbit_poset(α, β). Throws BudgetExceeded when an exhaustive space has
 * more than `exhaustive_cap` blocks.
 */
MembershipReport reachable_types(const Partition& alpha, const Partition& beta,
                                 std::span<const Strategy> strategies,
                                 std::uint64_t exhaustive_cap = kDefaultBudget);

inline MembershipReport reachable_types(const Partition& alpha, const Partition& beta, const Strategy& strategy,
                                        std::uint64_t exhaustive_cap = kDefaultBudget) {
    return reachable_types(alpha, beta, std::span<const Strategy>(&strategy, 1), exhaustive_cap);
}

}  // namespace orbitlr
