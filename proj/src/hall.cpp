#include "orbitlr/hall.hpp"

#include <algorithm>
#include <future>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "orbitlr/error.hpp"

namespace orbitlr {

namespace {

using Rational = boost::multiprecision::cpp_rational;

/// Elimination mod a small prime with a cached inverse table.
class SmallPrimeReducer {
public:
    explicit SmallPrimeReducer(const PrimeField& field) : field_(field), p_(field.characteristic()) {
        if (p_ < (std::uint64_t{1} << 16)) {
            inverse_.assign(p_, 0);
            for (std::uint64_t v = 1; v < p_; ++v)
                inverse_[v] = field.inv(v);
        }
    }

    std::uint64_t inv(std::uint64_t v) const { return inverse_.empty() ? field_.inv(v) : inverse_[v]; }

    /// Rank of a rows×cols buffer; destroys the buffer.
    std::size_t rank(std::uint64_t* a, std::size_t rows, std::size_t cols) const {
        std::size_t r = 0;
        for (std::size_t col = 0; col < cols && r < rows; ++col) {
            std::size_t pivot = r;
            while (pivot < rows && a[pivot * cols + col] == 0)
                ++pivot;
            if (pivot == rows)
                continue;
            if (pivot != r)
                for (std::size_t j = col; j < cols; ++j)
                    std::swap(a[pivot * cols + j], a[r * cols + j]);
            const std::uint64_t scale = inv(a[r * cols + col]);
            for (std::size_t row = r + 1; row < rows; ++row) {
                const std::uint64_t lead = a[row * cols + col];
                if (lead == 0)
                    continue;
                const std::uint64_t factor = p_ - (lead * scale) % p_;
                for (std::size_t j = col; j < cols; ++j)
                    a[row * cols + j] = (a[row * cols + j] + factor * a[r * cols + j]) % p_;
            }
            ++r;
        }
        return r;
    }

private:
    PrimeField field_;
    std::uint64_t p_;
    std::vector<std::uint64_t> inverse_;
};

/**
 * Visits every dim×cols matrix in reduced row echelon form over F_q exactly
 * once: for each pivot set, every assignment of the free entries (right of a
 * row's pivot, outside pivot columns). `visit(rows, pivots)` sees the flat
 * row-major buffer.
 */
template <class Visit>
void for_each_rref(std::size_t cols, std::size_t dim, std::uint64_t q, Visit&& visit) {
    if (dim > cols)
        return;
    std::vector<std::size_t> pivots(dim);
    for (std::size_t i = 0; i < dim; ++i)
        pivots[i] = i;
    std::vector<std::uint64_t> rows(dim * cols);
    std::vector<std::size_t> free_cells;
    while (true) {
        std::fill(rows.begin(), rows.end(), 0);
        free_cells.clear();
        std::vector<bool> is_pivot(cols, false);
        for (std::size_t i = 0; i < dim; ++i) {
            rows[i * cols + pivots[i]] = 1;
            is_pivot[pivots[i]] = true;
        }
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t c = pivots[i] + 1; c < cols; ++c)
                if (!is_pivot[c])
                    free_cells.push_back(i * cols + c);

        while (true) {
            visit(rows, pivots);
            std::size_t d = 0;
            for (; d < free_cells.size(); ++d) {
                if (++rows[free_cells[d]] < q)
                    break;
                rows[free_cells[d]] = 0;
            }
            if (d == free_cells.size())
                break;
        }

        // next pivot combination in lexicographic order
        std::size_t i = dim;
        while (i > 0 && pivots[i - 1] == cols - dim + (i - 1))
            --i;
        if (i == 0)
            break;
        ++pivots[i - 1];
        for (std::size_t j = i; j < dim; ++j)
            pivots[j] = pivots[j - 1] + 1;
    }
}

/// Block layout of M_λ in the standard basis.
struct Blocks {
    explicit Blocks(const Partition& lambda) {
        for (int part : lambda.parts())
            for (int t = 0; t < part; ++t) {
                offset.push_back(static_cast<std::size_t>(t));
                block_size.push_back(static_cast<std::size_t>(part));
            }
    }
    std::vector<std::size_t> offset;      // position of each coordinate inside its block
    std::vector<std::size_t> block_size;  // size of the block holding each coordinate

    /// (T^j v)_i = v_{i+j} exactly when i+j lies in the same block.
    bool shifts(std::size_t i, std::size_t j) const { return offset[i] + j < block_size[i]; }
};

int tail(const Partition& lambda, int j) {
    int total = 0;
    for (int part : lambda.parts())
        total += std::max(part - j, 0);
    return total;
}

}  // namespace

FiniteModule::FiniteModule(Partition lambda, std::uint64_t q) : lambda_(std::move(lambda)), field_(q) {}

std::vector<std::uint64_t> FiniteModule::apply(const std::vector<std::uint64_t>& v) const {
    const Blocks blocks(lambda_);
    std::vector<std::uint64_t> out(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (blocks.shifts(i, 1))
            out[i] = v[i + 1];
    return out;
}

std::uint64_t gaussian_binomial(int n, int k, std::uint64_t q) {
    if (k < 0 || k > n)
        return 0;
    // [n,k] = [n-1,k-1] + q^k [n-1,k]
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::vector<std::uint64_t>> table(n + 1, std::vector<std::uint64_t>(k + 1, 0));
    auto sat_add = [](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };
    auto sat_mul = [](std::uint64_t a, std::uint64_t b) { return b != 0 && a > kMax / b ? kMax : a * b; };
    for (int m = 0; m <= n; ++m) {
        table[m][0] = 1;
        std::uint64_t qpow = 1;
        for (int j = 1; j <= std::min(m, k); ++j) {
            qpow = sat_mul(qpow, q);
            table[m][j] = j == m ? 1 : sat_add(table[m - 1][j - 1], sat_mul(qpow, table[m - 1][j]));
        }
    }
    return table[n][k];
}

std::vector<Subspace> invariant_subspaces(const FiniteModule& module, std::uint64_t budget) {
    const std::size_t n = module.dimension();
    const std::uint64_t q = module.q();
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        total += gaussian_binomial(static_cast<int>(n), static_cast<int>(k), q);
        if (total > budget)
            throw Error(ErrorKind::BudgetExceeded, "M_" + module.type().to_string() + " over F_" +
                                                       std::to_string(q) + " has more than " +
                                                       std::to_string(budget) + " subspaces");
    }

    const PrimeField& field = module.field();
    std::vector<Subspace> out;
    std::vector<std::uint64_t> image;
    for (std::size_t k = 0; k <= n; ++k) {
        for_each_rref(n, k, q, [&](const std::vector<std::uint64_t>& rows, const std::vector<std::size_t>& pivots) {
            for (std::size_t i = 0; i < k; ++i) {
                image = module.apply({rows.begin() + i * n, rows.begin() + (i + 1) * n});
                // in reduced echelon form one pass against the pivots decides membership
                for (std::size_t r = 0; r < k; ++r) {
                    const std::uint64_t c = image[pivots[r]];
                    if (c == 0)
                        continue;
                    for (std::size_t j = 0; j < n; ++j)
                        image[j] = field.sub(image[j], field.mul(c, rows[r * n + j]));
                }
                if (std::any_of(image.begin(), image.end(), [](std::uint64_t v) { return v != 0; }))
                    return;
            }
            Subspace sub;
            for (std::size_t i = 0; i < k; ++i)
                sub.basis.emplace_back(rows.begin() + i * n, rows.begin() + (i + 1) * n);
            out.push_back(std::move(sub));
        });
    }
    return out;
}

Partition submodule_type(const FiniteModule& module, const Subspace& sub) {
    const std::size_t n = module.dimension();
    std::vector<std::vector<std::uint64_t>> images = sub.basis;
    std::vector<int> columns;
    std::size_t previous = sub.dimension();
    while (previous > 0) {
        for (auto& v : images)
            v = module.apply(v);
        std::vector<std::uint64_t> flat;
        for (const auto& v : images)
            flat.insert(flat.end(), v.begin(), v.end());
        const std::size_t r = rank_of(module.field(), std::move(flat), images.size(), n);
        columns.push_back(static_cast<int>(previous - r));
        previous = r;
    }
    return conjugate(Partition(std::move(columns)));
}

Partition quotient_type(const FiniteModule& module, const Subspace& sub) {
    const std::size_t n = module.dimension();
    const std::size_t k = sub.dimension();
    // rows of T^j: images of the standard basis
    std::vector<std::vector<std::uint64_t>> powers;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::uint64_t> e(n, 0);
        e[i] = 1;
        powers.push_back(std::move(e));
    }
    std::vector<int> columns;
    std::size_t previous = n - k;
    while (previous > 0) {
        std::vector<std::uint64_t> flat;
        for (auto& v : powers) {
            v = module.apply(v);
            flat.insert(flat.end(), v.begin(), v.end());
        }
        for (const auto& b : sub.basis)
            flat.insert(flat.end(), b.begin(), b.end());
        const std::size_t r = rank_of(module.field(), std::move(flat), n + k, n) - k;
        columns.push_back(static_cast<int>(previous - r));
        previous = r;
    }
    return conjugate(Partition(std::move(columns)));
}

std::int64_t hall_number(const Partition& alpha, const Partition& beta, const Partition& gamma, std::uint64_t q,
                         std::uint64_t budget) {
    if (alpha.weight() + beta.weight() != gamma.weight())
        throw Error(ErrorKind::WeightMismatch, "|" + alpha.to_string() + "| + |" + beta.to_string() +
                                                   "| != |" + gamma.to_string() + "|");
    const PrimeField field(q);

    // dim T^j N ≤ dim T^j M, dim ker T^j|_N ≤ dim ker T^j, dim T^j(M/N) ≤ dim T^j M
    const int depth = std::max({alpha[0], beta[0], gamma[0]});
    for (int j = 0; j <= depth; ++j) {
        const int image = tail(gamma, j);
        if (tail(alpha, j) > image || tail(beta, j) > image ||
            alpha.weight() - tail(alpha, j) > gamma.weight() - image)
            return 0;
    }

    const SmallPrimeReducer reducer(field);
    const Blocks blocks(gamma);
    const std::size_t n = static_cast<std::size_t>(gamma.weight());
    const std::size_t k = static_cast<std::size_t>(alpha.weight());
    const auto top_alpha = static_cast<std::size_t>(alpha[0]);
    const auto top_beta = static_cast<std::size_t>(beta[0]);

    // N must contain T^{β_1} M (coordinates at offset < size − β_1) and lie in
    // ker T^{α_1} (offset < α_1). Everything else is free.
    std::vector<std::size_t> free_coords;
    std::size_t forced = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const bool in_image = blocks.shifts(i, top_beta);
        const bool in_kernel = blocks.offset[i] < top_alpha;
        if (in_image && !in_kernel)
            return 0;
        if (in_image)
            ++forced;
        else if (in_kernel)
            free_coords.push_back(i);
    }
    if (forced > k || k - forced > free_coords.size())
        return 0;
    const std::size_t span_dim = k - forced;
    const std::size_t candidates =
        gaussian_binomial(static_cast<int>(free_coords.size()), static_cast<int>(span_dim), q);
    if (candidates > budget)
        throw Error(ErrorKind::BudgetExceeded, std::to_string(candidates) + " candidate submodules of M_" +
                                                   gamma.to_string() + " over F_" + std::to_string(q) +
                                                   " exceed the budget of " + std::to_string(budget));

    // Basis of N: unit vectors on the forced coordinates, then the free part.
    std::vector<std::uint64_t> basis(k * n, 0);
    std::size_t row = 0;
    std::vector<bool> is_forced(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (blocks.shifts(i, top_beta)) {
            basis[row * n + i] = 1;
            is_forced[i] = true;
            ++row;
        }
    }

    // For the quotient check: coordinates outside im T^j, for each j.
    std::vector<std::vector<std::size_t>> outside(top_beta);
    std::vector<std::size_t> image_dim(top_beta, 0);
    for (std::size_t j = 1; j < top_beta; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            if (blocks.shifts(i, j))
                ++image_dim[j];
            else
                outside[j].push_back(i);
        }

    const std::uint64_t p = q;
    std::vector<std::uint64_t> image(n);
    std::vector<std::uint64_t> scratch(k * n);
    std::vector<std::size_t> pivot_coords(span_dim);
    std::int64_t count = 0;

    for_each_rref(free_coords.size(), span_dim, q,
                  [&](const std::vector<std::uint64_t>& rows, const std::vector<std::size_t>& pivots) {
        const std::size_t m = free_coords.size();
        for (std::size_t r = 0; r < span_dim; ++r) {
            std::uint64_t* dst = &basis[(forced + r) * n];
            std::fill(dst, dst + n, 0);
            for (std::size_t c = 0; c < m; ++c)
                dst[free_coords[c]] = rows[r * m + c];
            pivot_coords[r] = free_coords[pivots[r]];
        }

        // invariance; the forced part is T-stable on its own
        for (std::size_t r = forced; r < k; ++r) {
            const std::uint64_t* src = &basis[r * n];
            for (std::size_t i = 0; i < n; ++i)
                image[i] = blocks.shifts(i, 1) ? src[i + 1] : 0;
            for (std::size_t i = 0; i < n; ++i)
                if (is_forced[i])
                    image[i] = 0;
            for (std::size_t s = 0; s < span_dim; ++s) {
                const std::uint64_t c = image[pivot_coords[s]];
                if (c == 0)
                    continue;
                const std::uint64_t* b = &basis[(forced + s) * n];
                const std::uint64_t factor = p - c;
                for (std::size_t i = 0; i < n; ++i)
                    image[i] = (image[i] + factor * b[i]) % p;
            }
            for (std::size_t i = 0; i < n; ++i)
                if (image[i] != 0)
                    return;
        }

        // Jordan type of T on N through dim T^j N
        for (std::size_t j = 1; j < top_alpha; ++j) {
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t i = 0; i < n; ++i)
                    scratch[r * n + i] = blocks.shifts(i, j) ? basis[r * n + i + j] : 0;
            if (reducer.rank(scratch.data(), k, n) != static_cast<std::size_t>(tail(alpha, static_cast<int>(j))))
                return;
        }

        // Jordan type on M/N through dim(T^j M + N) − dim N
        for (std::size_t j = 1; j < top_beta; ++j) {
            const auto& cols = outside[j];
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < cols.size(); ++c)
                    scratch[r * cols.size() + c] = basis[r * n + cols[c]];
            const std::size_t dim = image_dim[j] + reducer.rank(scratch.data(), k, cols.size());
            if (dim - k != static_cast<std::size_t>(tail(beta, static_cast<int>(j))))
                return;
        }
        ++count;
    });
    return count;
}

std::int64_t HallPolynomial::evaluate(std::int64_t q) const {
    std::int64_t value = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        value = value * q + *it;
    return value;
}

std::string HallPolynomial::to_string() const {
    if (coeffs.empty())
        return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const std::int64_t c = coeffs[static_cast<std::size_t>(d)];
        if (c == 0)
            continue;
        const std::int64_t magnitude = c < 0 ? -c : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (magnitude != 1 || d == 0)
            out += std::to_string(magnitude);
        if (d >= 1)
            out += "q";
        if (d >= 2)
            out += "^" + std::to_string(d);
    }
    return out;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t candidate = 2; primes.size() < count; ++candidate)
        if (is_prime(candidate))
            primes.push_back(candidate);
    return primes;
}

HallPolynomial hall_polynomial(const Partition& alpha, const Partition& beta, const Partition& gamma,
                               std::uint64_t budget) {
    if (alpha.weight() + beta.weight() != gamma.weight())
        throw Error(ErrorKind::WeightMismatch, "|" + alpha.to_string() + "| + |" + beta.to_string() +
                                                   "| != |" + gamma.to_string() + "|");
    const std::int64_t d = std::max<std::int64_t>(0, n_stat(gamma) - n_stat(alpha) - n_stat(beta));
    const auto nodes = first_primes(static_cast<std::size_t>(d) + 2);

    std::vector<std::future<std::int64_t>> pending;
    for (auto q : nodes)
        pending.push_back(std::async(std::launch::async, [&, q] { return hall_number(alpha, beta, gamma, q, budget); }));
    std::vector<std::int64_t> values;
    for (auto& f : pending)
        values.push_back(f.get());

    // Newton divided differences on the first d+1 nodes, expanded to monomials.
    const std::size_t fit = static_cast<std::size_t>(d) + 1;
    std::vector<Rational> diff(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(fit));
    for (std::size_t level = 1; level < fit; ++level)
        for (std::size_t i = fit - 1; i >= level; --i)
            diff[i] = (diff[i] - diff[i - 1]) / Rational(static_cast<std::int64_t>(nodes[i] - nodes[i - level]));
    std::vector<Rational> poly(fit, Rational(0));
    std::vector<Rational> basis{Rational(1)};
    for (std::size_t i = 0; i < fit; ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j)
            poly[j] += diff[i] * basis[j];
        std::vector<Rational> next(basis.size() + 1, Rational(0));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            next[j + 1] += basis[j];
            next[j] -= basis[j] * Rational(static_cast<std::int64_t>(nodes[i]));
        }
        basis = std::move(next);
    }

    HallPolynomial out{alpha, beta, gamma, {}};
    for (const auto& c : poly) {
        if (denominator(c) != 1)
            throw Error(ErrorKind::NonIntegralInterpolation,
                        "coefficient " + c.str() + " of G^" + gamma.to_string() + "_{" + alpha.to_string() + "," +
                            beta.to_string() + "}");
        out.coeffs.push_back(static_cast<std::int64_t>(numerator(c)));
    }
    while (!out.coeffs.empty() && out.coeffs.back() == 0)
        out.coeffs.pop_back();

    const auto check = static_cast<std::int64_t>(nodes.back());
    if (out.evaluate(check) != values.back())
        throw Error(ErrorKind::InconsistentInterpolation,
                    "G^" + gamma.to_string() + "_{" + alpha.to_string() + "," + beta.to_string() + "}(" +
                        std::to_string(check) + ") = " + std::to_string(values.back()) + " but the fit gives " +
                        std::to_string(out.evaluate(check)));
    return out;
}

}  // namespace orbitlr
