#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace orbitlr {

/**
 * An integer partition in normal form: positive parts, weakly decreasing,
 * no trailing zeros. Indexing past the last part yields 0, so binary
 * operations can treat every partition as padded with zeros.
 *
 * Partitions label nilpotent GL(n)-orbits through their Jordan types.
 */
class Partition {
public:
    Partition() = default;

    /// Accepts trailing zeros and strips them; rejects negative or increasing input.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parses "3,2,1" (whitespace tolerated). The empty string is the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int weight() const noexcept { return weight_; }

    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    /// Cellwise containment of Young diagrams: this_i <= other_i for all i.
    bool contained_in(const Partition& other) const noexcept;

    /// "[3,2,1]"
    std::string to_string() const;
    /// "3,2,1", the key format used in serialized Schur expansions.
    std::string to_key() const;

    // Lexicographic on parts; within one weight this is the reverse-lex order.
    auto operator<=>(const Partition& other) const = default;
    bool operator==(const Partition& other) const = default;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

Partition conjugate(const Partition& lambda);

/// Dominance order: partial sums of `lambda` never exceed those of `mu`.
/// Throws UnequalWeight when the weights differ.
bool dominates(const Partition& mu, const Partition& lambda);

/// Multiset union of the parts (Jordan type of a direct sum).
Partition union_of(const Partition& alpha, const Partition& beta);

/// Componentwise sum of the zero-padded sequences.
Partition sum_of(const Partition& alpha, const Partition& beta);

/// n(lambda) = sum_i (i-1) lambda_i with 1-based i.
std::int64_t n_stat(const Partition& lambda);

/// ||lambda^t||^2, the sum of squared column lengths.
std::int64_t sq_norm_conj(const Partition& lambda);

/// All partitions of n, in reverse-lexicographic order. Throws NegativeInput for n < 0.
std::vector<Partition> partitions_of(int n);

}  // namespace orbitlr
