#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orbitlr/partition.hpp"

namespace orbitlr {

/// A cover relation low ⋖ high in dominance order.
struct Cover {
    Partition low;
    Partition high;

    auto operator<=>(const Cover&) const = default;
    bool operator==(const Cover&) const = default;
};

/**
 * The nilpotent orbits O_γ that meet G·(O_{α,β} + n), i.e. the γ with
 * c^γ_{α,β} ≠ 0, ordered by closure (dominance). `excluded` holds the
 * partitions of the dominance interval [α∪β, α+β] whose coefficient vanishes.
 * All lists are in reverse-lexicographic order (largest first).
 */
struct OrbitPoset {
    Partition alpha;
    Partition beta;
    std::vector<Partition> nodes;
    std::vector<Cover> covers;
    std::vector<Partition> excluded;

    bool operator==(const OrbitPoset&) const = default;
};

/// Transitive reduction of dominance restricted to `elements` (all of one weight).
std::vector<Cover> dominance_covers(std::span<const Partition> elements);

OrbitPoset orbit_poset(const Partition& alpha, const Partition& beta);

/// Graphviz rendering. Nodes are labeled "[3,2,1]", edges point from the larger
/// orbit to the smaller; excluded orbits and their interval edges are dashed grey.
std::string to_dot(const OrbitPoset& poset);

/// The induced orbit, dense in G·(O_{α,β} + n): the partition α+β.
Partition induced(const Partition& alpha, const Partition& beta);

/// The saturation G·O_{α,β}: the partition α∪β.
Partition saturated(const Partition& alpha, const Partition& beta);

/// Dimension of the Satake fiber, n(γ) − n(α) − n(β).
/// Throws WeightMismatch if |α|+|β| ≠ |γ| and EmptyFiber if c^γ_{α,β} = 0.
std::int64_t fiber_dim(const Partition& alpha, const Partition& beta, const Partition& gamma);

/// The same dimension through column lengths: (‖γ^t‖² − ‖α^t‖² − ‖β^t‖²) / 2.
/// Throws WeightMismatch.
std::int64_t fiber_dim_conj(const Partition& alpha, const Partition& beta, const Partition& gamma);

/// dim O_γ in gl(n) = n² − Σ (γ^t_i)². Throws WeightMismatch if |γ| ≠ n.
std::int64_t dim_orbit(const Partition& gamma, int n);

/// dim Gr^λ for GL(n) = Σ_i (n + 1 − 2i) λ_i. Throws TooLong if length(λ) > n.
std::int64_t dim_schubert(const Partition& lambda, int n);

}  // namespace orbitlr
