#include "orbitlr/lr.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

#include "orbitlr/error.hpp"
#include "orbitlr/tableaux.hpp"

namespace orbitlr {

void SchurExpansion::add(const Partition& gamma, std::int64_t coefficient) {
    if (coefficient == 0)
        return;
    if (!terms_.empty() && terms_.begin()->first.weight() != gamma.weight())
        throw Error(ErrorKind::WeightMismatch, "expansion mixes weights");
    auto& slot = terms_[gamma];
    slot += coefficient;
    if (slot == 0)
        terms_.erase(gamma);
}

std::int64_t SchurExpansion::coefficient(const Partition& gamma) const {
    auto it = terms_.find(gamma);
    return it == terms_.end() ? 0 : it->second;
}

std::int64_t lr_coeff(const Partition& alpha, const Partition& beta, const Partition& gamma) {
    if (alpha.weight() + beta.weight() != gamma.weight())
        return 0;
    if (!alpha.contained_in(gamma) || !beta.contained_in(gamma))
        return 0;
    return count_lr_tableaux(SkewShape(gamma, alpha), beta);
}

SchurExpansion lr_expand_product(const Partition& alpha, const Partition& beta) {
    SchurExpansion out;
    for (const auto& gamma : partitions_of(alpha.weight() + beta.weight()))
        out.add(gamma, lr_coeff(alpha, beta, gamma));
    return out;
}

namespace {

using KostkaKey = std::pair<std::vector<int>, std::vector<int>>;

std::int64_t kostka_rec(const std::vector<int>& shape, std::vector<int>& weights,
                        std::map<KostkaKey, std::int64_t>& memo) {
    if (weights.empty())
        return shape.empty() ? 1 : 0;
    KostkaKey key{shape, weights};
    if (auto it = memo.find(key); it != memo.end())
        return it->second;

    const int strip = weights.back();
    weights.pop_back();
    std::int64_t total = 0;
    // choose inner rows nu_i in [shape_{i+1}, shape_i] removing `strip` cells in total
    std::vector<int> inner(shape);
    auto descend = [&](auto&& self, std::size_t row, int left) -> void {
        if (row == shape.size()) {
            if (left == 0) {
                std::vector<int> trimmed(inner);
                while (!trimmed.empty() && trimmed.back() == 0)
                    trimmed.pop_back();
                total += kostka_rec(trimmed, weights, memo);
            }
            return;
        }
        const int floor = row + 1 < shape.size() ? shape[row + 1] : 0;
        for (int take = 0; take <= std::min(left, shape[row] - floor); ++take) {
            inner[row] = shape[row] - take;
            self(self, row + 1, left - take);
        }
        inner[row] = shape[row];
    };
    descend(descend, 0, strip);
    weights.push_back(strip);
    memo.emplace(std::move(key), total);
    return total;
}

std::map<KostkaKey, std::int64_t>& kostka_memo() {
    thread_local std::map<KostkaKey, std::int64_t> memo;
    return memo;
}

// Compositions a of `total` into `slots` parts with a_i <= bound_i.
void bounded_compositions(int total, const std::vector<int>& bound, std::size_t index,
                          std::vector<int>& current, const std::function<void()>& visit) {
    if (index == bound.size()) {
        if (total == 0)
            visit();
        return;
    }
    const int remaining_capacity =
        std::accumulate(bound.begin() + static_cast<std::ptrdiff_t>(index) + 1, bound.end(), 0);
    for (int v = std::max(0, total - remaining_capacity); v <= std::min(total, bound[index]); ++v) {
        current[index] = v;
        bounded_compositions(total - v, bound, index + 1, current, visit);
    }
    current[index] = 0;
}

}  // namespace

std::int64_t kostka_number(const Partition& lambda, std::span<const int> weights) {
    std::vector<int> w;
    for (int x : weights) {
        if (x < 0)
            throw Error(ErrorKind::NegativeInput, "negative content entry");
        if (x > 0)
            w.push_back(x);  // zero letters contribute an empty strip
    }
    if (std::accumulate(w.begin(), w.end(), 0) != lambda.weight())
        return 0;
    return kostka_rec(lambda.parts(), w, kostka_memo());
}

SchurExpansion schur_expand_product(const Partition& alpha, const Partition& beta) {
    const int n = alpha.weight() + beta.weight();
    const auto k = static_cast<std::size_t>(n);

    // Coefficient of x^mu in s_alpha * s_beta for every dominant exponent mu:
    // sum over exponent splits mu = a + b of [x^a]s_alpha * [x^b]s_beta.
    std::map<Partition, std::int64_t> dominant;
    for (const auto& mu : partitions_of(n)) {
        std::vector<int> bound(k, 0);
        for (std::size_t i = 0; i < k; ++i)
            bound[i] = mu[i];
        std::vector<int> a(k, 0);
        std::vector<int> b(k, 0);
        std::int64_t coef = 0;
        bounded_compositions(alpha.weight(), bound, 0, a, [&] {
            const std::int64_t left = kostka_number(alpha, a);
            if (left == 0)
                return;
            for (std::size_t i = 0; i < k; ++i)
                b[i] = bound[i] - a[i];
            coef += left * kostka_number(beta, b);
        });
        if (coef != 0)
            dominant.emplace(mu, coef);
    }

    SchurExpansion out;
    const auto candidates = partitions_of(n);
    while (!dominant.empty()) {
        const auto [lead, coef] = *dominant.rbegin();
        if (coef < 0)
            throw std::logic_error("negative Schur coefficient at " + lead.to_string());
        out.add(lead, coef);
        for (const auto& nu : candidates) {
            const std::int64_t k_lead_nu = kostka_number(lead, nu.parts());
            if (k_lead_nu == 0)
                continue;
            auto& slot = dominant[nu];
            slot -= coef * k_lead_nu;
            if (slot == 0)
                dominant.erase(nu);
        }
    }
    return out;
}

std::int64_t chain_coeff(std::span<const Partition> blocks, const Partition& gamma) {
    const int total = std::accumulate(blocks.begin(), blocks.end(), 0,
                                      [](int acc, const Partition& p) { return acc + p.weight(); });
    if (total != gamma.weight())
        throw Error(ErrorKind::WeightMismatch, "blocks have total weight " + std::to_string(total) +
                                                   ", target " + gamma.to_string() + " has " +
                                                   std::to_string(gamma.weight()));
    if (blocks.empty())
        return gamma.empty() ? 1 : 0;

    std::map<Partition, std::int64_t> current{{blocks[0], 1}};
    for (std::size_t i = 1; i < blocks.size(); ++i) {
        std::map<Partition, std::int64_t> next;
        for (const auto& [nu, mult] : current) {
            // an intermediate shape outside gamma never grows back into it
            if (!nu.contained_in(gamma))
                continue;
            const SchurExpansion step = lr_expand_product(nu, blocks[i]);
            for (const auto& [rho, c] : step.terms())
                next[rho] += mult * c;
        }
        current = std::move(next);
    }
    auto it = current.find(gamma);
    return it == current.end() ? 0 : it->second;
}

}  // namespace orbitlr
