#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "orbitlr/partition.hpp"

namespace orbitlr {

/// The skew diagram outer/inner. Construction throws ShapeMismatch unless inner ⊆ outer.
class SkewShape {
public:
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }

    std::size_t rows() const noexcept { return outer_.length(); }
    /// First skew column of row r (0-based).
    int row_begin(std::size_t r) const noexcept { return inner_[r]; }
    /// One past the last column of row r.
    int row_end(std::size_t r) const noexcept { return outer_[r]; }
    int row_size(std::size_t r) const noexcept { return outer_[r] - inner_[r]; }
    int size() const noexcept { return outer_.weight() - inner_.weight(); }

    bool operator==(const SkewShape&) const = default;

private:
    Partition outer_;
    Partition inner_;
};

/**
 * A filling of a skew shape. `rows[r]` holds the entries of the skew cells
 * of row r, left to right; rows that are entirely inside the inner shape are
 * empty vectors. Equality is structural.
 */
struct SkewTableau {
    SkewShape shape;
    std::vector<std::vector<int>> rows;

    /// (#1s, #2s, ...), trailing zeros stripped.
    std::vector<int> content() const;
    /// Row lengths match the shape, entries positive, rows weakly increase, columns strictly increase.
    bool is_semistandard() const;

    bool operator==(const SkewTableau&) const = default;
};

/// Rows top to bottom, each read right to left.
std::vector<int> reverse_reading_word(const SkewTableau& tableau);

/// Every prefix has at least as many i's as (i+1)'s, for every i.
bool is_yamanouchi(std::span<const int> word);

/// All Littlewood-Richardson tableaux of the given shape and content, sorted
/// row-major lexicographically. Throws ShapeMismatch when |content| != |shape|.
std::vector<SkewTableau> lr_tableaux(const SkewShape& shape, const Partition& content);

/// Same search as lr_tableaux without materialising the fillings.
std::int64_t count_lr_tableaux(const SkewShape& shape, const Partition& content);

/// Number of standard Young tableaux via the hook-length formula.
/// Throws InvalidArgument for |lambda| > 20 (|lambda|! leaves 64 bits).
std::int64_t syt_count_hook(const Partition& lambda);

/// Number of semistandard tableaux of shape lambda with entries in 1..k, by
/// direct enumeration. Throws TooFewVariables if k < length(lambda).
std::int64_t ssyt_count(const Partition& lambda, int k);

}  // namespace orbitlr
