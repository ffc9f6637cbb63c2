#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "orbitlr/field.hpp"

namespace orbitlr {

/// Dense square matrix over an exact field (PrimeField or RationalField), row-major.
template <class Field>
class ExactMatrix {
public:
    using value_type = typename Field::value_type;

    ExactMatrix(Field field, std::size_t n)
        : field_(std::move(field)), n_(n), entries_(n * n, field_.zero()) {}

    static ExactMatrix identity(Field field, std::size_t n) {
        ExactMatrix m(std::move(field), n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = m.field_.one();
        return m;
    }

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return n_; }

    value_type& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const value_type& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    bool is_zero() const {
        for (const auto& v : entries_)
            if (!field_.is_zero(v))
                return false;
        return true;
    }

    ExactMatrix operator*(const ExactMatrix& rhs) const {
        ExactMatrix out(field_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const value_type& a = (*this)(i, k);
                if (field_.is_zero(a))
                    continue;
                for (std::size_t j = 0; j < n_; ++j)
                    out(i, j) = field_.add(out(i, j), field_.mul(a, rhs(k, j)));
            }
        return out;
    }

    ExactMatrix operator+(const ExactMatrix& rhs) const {
        ExactMatrix out(field_, n_);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            out.entries_[i] = field_.add(entries_[i], rhs.entries_[i]);
        return out;
    }

    ExactMatrix operator-(const ExactMatrix& rhs) const {
        ExactMatrix out(field_, n_);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            out.entries_[i] = field_.sub(entries_[i], rhs.entries_[i]);
        return out;
    }

    /// Rank by Gaussian elimination on a copy.
    std::size_t rank() const {
        auto work = entries_;
        return eliminate(field_, work, n_, n_);
    }

    /// Inverse by Gauss-Jordan; nullopt when singular.
    std::optional<ExactMatrix> inverse() const {
        const std::size_t width = 2 * n_;
        std::vector<value_type> aug(n_ * width, field_.zero());
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j)
                aug[i * width + j] = (*this)(i, j);
            aug[i * width + n_ + i] = field_.one();
        }
        for (std::size_t col = 0; col < n_; ++col) {
            std::size_t pivot = col;
            while (pivot < n_ && field_.is_zero(aug[pivot * width + col]))
                ++pivot;
            if (pivot == n_)
                return std::nullopt;
            for (std::size_t j = 0; j < width; ++j)
                std::swap(aug[pivot * width + j], aug[col * width + j]);
            const value_type scale = field_.inv(aug[col * width + col]);
            for (std::size_t j = 0; j < width; ++j)
                aug[col * width + j] = field_.mul(aug[col * width + j], scale);
            for (std::size_t r = 0; r < n_; ++r) {
                if (r == col || field_.is_zero(aug[r * width + col]))
                    continue;
                const value_type factor = aug[r * width + col];
                for (std::size_t j = 0; j < width; ++j)
                    aug[r * width + j] =
                        field_.sub(aug[r * width + j], field_.mul(factor, aug[col * width + j]));
            }
        }
        ExactMatrix out(field_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                out(i, j) = aug[i * width + n_ + j];
        return out;
    }

    bool operator==(const ExactMatrix& rhs) const {
        return n_ == rhs.n_ && field_ == rhs.field_ && entries_ == rhs.entries_;
    }

    /// Reduces a rows×cols row-major buffer to row echelon form in place; returns the rank.
    static std::size_t eliminate(const Field& field, std::vector<value_type>& a, std::size_t rows,
                                 std::size_t cols) {
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols && rank < rows; ++col) {
            std::size_t pivot = rank;
            while (pivot < rows && field.is_zero(a[pivot * cols + col]))
                ++pivot;
            if (pivot == rows)
                continue;
            if (pivot != rank)
                for (std::size_t j = col; j < cols; ++j)
                    std::swap(a[pivot * cols + j], a[rank * cols + j]);
            const value_type inv = field.inv(a[rank * cols + col]);
            for (std::size_t r = rank + 1; r < rows; ++r) {
                if (field.is_zero(a[r * cols + col]))
                    continue;
                const value_type factor = field.mul(a[r * cols + col], inv);
                for (std::size_t j = col; j < cols; ++j)
                    a[r * cols + j] = field.sub(a[r * cols + j], field.mul(factor, a[rank * cols + j]));
            }
            ++rank;
        }
        return rank;
    }

private:
    Field field_;
    std::size_t n_;
    std::vector<value_type> entries_;
};

/// Block-diagonal direct sum.
template <class Field>
ExactMatrix<Field> direct_sum(const ExactMatrix<Field>& a, const ExactMatrix<Field>& b) {
    ExactMatrix<Field> out(a.field(), a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            out(a.dim() + i, a.dim() + j) = b(i, j);
    return out;
}

/// Rank of a rows×cols matrix given row-major.
template <class Field>
std::size_t rank_of(const Field& field, std::vector<typename Field::value_type> entries, std::size_t rows,
                    std::size_t cols) {
    return ExactMatrix<Field>::eliminate(field, entries, rows, cols);
}

}  // namespace orbitlr
