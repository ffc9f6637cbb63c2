#include "orbitlr/orbit.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <sstream>

#include "orbitlr/error.hpp"
#include "orbitlr/lr.hpp"

namespace orbitlr {

std::vector<Cover> dominance_covers(std::span<const Partition> elements) {
    const std::size_t count = elements.size();
    // strictly[i][j]: elements[i] strictly dominates elements[j]
    std::vector<std::vector<bool>> strictly(count, std::vector<bool>(count, false));
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j)
            strictly[i][j] = i != j && elements[i] != elements[j] && dominates(elements[i], elements[j]);

    std::vector<Cover> covers;
    for (std::size_t hi = 0; hi < count; ++hi)
        for (std::size_t lo = 0; lo < count; ++lo) {
            if (!strictly[hi][lo])
                continue;
            bool between = false;
            for (std::size_t mid = 0; mid < count && !between; ++mid)
                between = strictly[hi][mid] && strictly[mid][lo];
            if (!between)
                covers.push_back(Cover{elements[lo], elements[hi]});
        }
    std::sort(covers.begin(), covers.end(), [](const Cover& a, const Cover& b) {
        return std::tie(b.high, b.low) < std::tie(a.high, a.low);
    });
    return covers;
}

OrbitPoset orbit_poset(const Partition& alpha, const Partition& beta) {
    OrbitPoset poset{alpha, beta, {}, {}, {}};
    const Partition top = sum_of(alpha, beta);
    const Partition bottom = union_of(alpha, beta);
    for (const auto& gamma : partitions_of(alpha.weight() + beta.weight())) {
        if (lr_coeff(alpha, beta, gamma) > 0)
            poset.nodes.push_back(gamma);
        else if (dominates(top, gamma) && dominates(gamma, bottom))
            poset.excluded.push_back(gamma);
    }
    poset.covers = dominance_covers(poset.nodes);
    return poset;
}

std::string to_dot(const OrbitPoset& poset) {
    auto quoted = [](const Partition& p) { return "\"" + p.to_string() + "\""; };
    std::ostringstream out;
    out << "digraph orbit_poset {\n";
    out << "  label=\"alpha=" << poset.alpha.to_string() << " beta=" << poset.beta.to_string()
        << "\";\n";
    out << "  node [shape=plaintext];\n";
    for (const auto& node : poset.nodes)
        out << "  " << quoted(node) << ";\n";
    for (const auto& node : poset.excluded)
        out << "  " << quoted(node) << " [style=dashed, shape=box, color=grey, fontcolor=grey];\n";
    for (const auto& cover : poset.covers)
        out << "  " << quoted(cover.high) << " -> " << quoted(cover.low) << " [dir=none];\n";

    // Hasse edges of the whole interval that touch an excluded orbit, drawn
    // grey so the struck-out orbits sit in place.
    if (!poset.excluded.empty()) {
        std::vector<Partition> interval(poset.nodes);
        interval.insert(interval.end(), poset.excluded.begin(), poset.excluded.end());
        const std::set<Partition> excluded(poset.excluded.begin(), poset.excluded.end());
        for (const auto& cover : dominance_covers(interval)) {
            if (!excluded.contains(cover.low) && !excluded.contains(cover.high))
                continue;
            out << "  " << quoted(cover.high) << " -> " << quoted(cover.low)
                << " [dir=none, style=dashed, color=grey];\n";
        }
    }
    out << "}\n";
    return out.str();
}

Partition induced(const Partition& alpha, const Partition& beta) {
    return sum_of(alpha, beta);
}

Partition saturated(const Partition& alpha, const Partition& beta) {
    return union_of(alpha, beta);
}

namespace {

void require_weights(const Partition& alpha, const Partition& beta, const Partition& gamma) {
    if (alpha.weight() + beta.weight() != gamma.weight())
        throw Error(ErrorKind::WeightMismatch, "|" + alpha.to_string() + "| + |" + beta.to_string() +
                                                   "| != |" + gamma.to_string() + "|");
}

}  // namespace

std::int64_t fiber_dim(const Partition& alpha, const Partition& beta, const Partition& gamma) {
    require_weights(alpha, beta, gamma);
    if (lr_coeff(alpha, beta, gamma) == 0)
        throw Error(ErrorKind::EmptyFiber, "c^" + gamma.to_string() + "_{" + alpha.to_string() + "," +
                                               beta.to_string() + "} = 0");
    return n_stat(gamma) - n_stat(alpha) - n_stat(beta);
}

std::int64_t fiber_dim_conj(const Partition& alpha, const Partition& beta, const Partition& gamma) {
    require_weights(alpha, beta, gamma);
    // ‖λ^t‖² = 2 n(λ) + |λ|, so the difference is even whenever the weights add up
    return (sq_norm_conj(gamma) - sq_norm_conj(alpha) - sq_norm_conj(beta)) / 2;
}

std::int64_t dim_orbit(const Partition& gamma, int n) {
    if (gamma.weight() != n)
        throw Error(ErrorKind::WeightMismatch,
                    gamma.to_string() + " is not a Jordan type in gl(" + std::to_string(n) + ")");
    return static_cast<std::int64_t>(n) * n - sq_norm_conj(gamma);
}

std::int64_t dim_schubert(const Partition& lambda, int n) {
    if (static_cast<int>(lambda.length()) > n)
        throw Error(ErrorKind::TooLong,
                    lambda.to_string() + " has more than " + std::to_string(n) + " parts");
    std::int64_t total = 0;
    for (std::size_t i = 0; i < lambda.length(); ++i)
        total += static_cast<std::int64_t>(n + 1 - 2 * static_cast<int>(i + 1)) * lambda[i];
    return total;
}

}  // namespace orbitlr
