#include "doctest.h"

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "orbitlr/error.hpp"
#include "orbitlr/lr.hpp"
#include "orbitlr/orbit.hpp"

using namespace orbitlr;

namespace {

std::set<Partition> as_set(const std::vector<Partition>& v) { return {v.begin(), v.end()}; }

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an orbitlr::Error");
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("posets for small pairs") {
    const auto small = orbit_poset(Partition{2, 2}, Partition{1, 1});
    CHECK(as_set(small.nodes) == std::set<Partition>{{3, 3}, {3, 2, 1}, {2, 2, 1, 1}});
    CHECK(as_set(small.excluded) == std::set<Partition>{{3, 1, 1, 1}, {2, 2, 2}});
    // [3,3] > [3,2,1] > [2,2,1,1], a chain once the excluded orbits are dropped
    CHECK(small.covers == std::vector<Cover>{{Partition{3, 2, 1}, Partition{3, 3}},
                                             {Partition{2, 2, 1, 1}, Partition{3, 2, 1}}});

    const auto big = orbit_poset(Partition{2, 2}, Partition{2, 2});
    CHECK(as_set(big.nodes) ==
          std::set<Partition>{{4, 4}, {4, 3, 1}, {4, 2, 2}, {3, 3, 1, 1}, {3, 2, 2, 1}, {2, 2, 2, 2}});
    const auto big_excluded = as_set(big.excluded);
    CHECK(big_excluded.count(Partition{4, 2, 1, 1}) == 1);
    CHECK(big_excluded.count(Partition{3, 3, 2}) == 1);

    const auto tiny = orbit_poset(Partition{1, 1}, Partition{1});
    CHECK(as_set(tiny.nodes) == std::set<Partition>{{2, 1}, {1, 1, 1}});
    CHECK(tiny.excluded.empty());
}

TEST_CASE("poset invariants") {
    for (const auto& [alpha, beta] : oracle::pairs_up_to(8)) {
        const auto poset = orbit_poset(alpha, beta);
        const Partition top = sum_of(alpha, beta);
        const Partition bottom = union_of(alpha, beta);

        // unique maximum and minimum
        for (const auto& g : poset.nodes) {
            CHECK(dominates(top, g));
            CHECK(dominates(g, bottom));
        }
        CHECK(std::find(poset.nodes.begin(), poset.nodes.end(), top) != poset.nodes.end());
        CHECK(std::find(poset.nodes.begin(), poset.nodes.end(), bottom) != poset.nodes.end());

        // nodes and excluded partition the interval
        std::set<Partition> interval;
        for (const auto& g : partitions_of(top.weight()))
            if (dominates(top, g) && dominates(g, bottom))
                interval.insert(g);
        const auto nodes = as_set(poset.nodes);
        const auto excluded = as_set(poset.excluded);
        CHECK(nodes.size() == poset.nodes.size());
        for (const auto& g : nodes)
            CHECK(excluded.count(g) == 0);
        std::set<Partition> both = nodes;
        both.insert(excluded.begin(), excluded.end());
        CHECK(both == interval);

        // nodes are exactly the Schur-product support
        std::set<Partition> support;
        const auto product = schur_expand_product(alpha, beta);
        for (const auto& [g, c] : product.terms())
            support.insert(g);
        CHECK(nodes == support);

        // covers: irreflexive, oriented by dominance, closure equals dominance
        const std::size_t n = poset.nodes.size();
        auto index = [&](const Partition& g) {
            return static_cast<std::size_t>(std::find(poset.nodes.begin(), poset.nodes.end(), g) -
                                            poset.nodes.begin());
        };
        std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            reach[i][i] = true;
        for (const auto& c : poset.covers) {
            CHECK(c.low != c.high);
            CHECK(dominates(c.high, c.low));
            reach[index(c.high)][index(c.low)] = true;
        }
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[i][k] && reach[k][j])
                        reach[i][j] = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(reach[i][j] == dominates(poset.nodes[i], poset.nodes[j]));
                if (i != j)
                    CHECK_FALSE((reach[i][j] && reach[j][i]));
            }
        // no cover is implied by two others
        for (const auto& c : poset.covers) {
            const auto hi = index(c.high);
            const auto lo = index(c.low);
            for (std::size_t k = 0; k < n; ++k)
                if (k != hi && k != lo)
                    CHECK_FALSE((reach[hi][k] && reach[k][lo]));
        }

        // fiber dimensions on the support
        for (const auto& g : poset.nodes) {
            const auto d = fiber_dim(alpha, beta, g);
            CHECK(d >= 0);
            CHECK((d == 0) == (g == top));
        }
    }
}

TEST_CASE("induced and saturated orbits") {
    CHECK(induced(Partition{2, 2}, Partition{1, 1}) == Partition{3, 3});
    CHECK(induced(Partition{2, 2}, Partition{2, 2}) == Partition{4, 4});
    CHECK(induced(Partition{3, 1}, Partition{}) == Partition{3, 1});
    CHECK(saturated(Partition{2, 2}, Partition{1, 1}) == Partition{2, 2, 1, 1});
    CHECK(saturated(Partition{2, 2}, Partition{2, 2}) == Partition{2, 2, 2, 2});
    CHECK(saturated(Partition{}, Partition{2, 1}) == Partition{2, 1});
}

TEST_CASE("fiber dimensions") {
    const Partition a{2, 1};
    CHECK(fiber_dim(a, a, Partition{2, 2, 1, 1}) == 5);
    CHECK(fiber_dim(a, a, Partition{2, 2, 2}) == 4);
    CHECK(fiber_dim(a, a, Partition{3, 1, 1, 1}) == 4);
    CHECK(fiber_dim(a, a, Partition{3, 2, 1}) == 2);
    CHECK(fiber_dim(a, a, Partition{3, 3}) == 1);
    CHECK(fiber_dim(a, a, Partition{4, 1, 1}) == 1);
    CHECK(fiber_dim(a, a, Partition{4, 2}) == 0);
    CHECK(fiber_dim(Partition{3, 2, 1}, Partition{3, 2, 1}, Partition{5, 3, 2, 1, 1}) == 6);

    CHECK(fiber_dim_conj(a, a, Partition{3, 2, 1}) == 2);
    CHECK(fiber_dim_conj(Partition{1}, Partition{1}, Partition{2}) == 0);
    CHECK(fiber_dim_conj(Partition{1}, Partition{1}, Partition{1, 1}) == 1);

    CHECK(kind_of([&] { fiber_dim(a, a, Partition{3, 3, 1}); }) == ErrorKind::WeightMismatch);
    CHECK(kind_of([&] { fiber_dim_conj(a, a, Partition{3}); }) == ErrorKind::WeightMismatch);
    CHECK(kind_of([] { fiber_dim(Partition{2, 2}, Partition{1, 1}, Partition{2, 2, 2}); }) ==
          ErrorKind::EmptyFiber);

    SUBCASE("both formulas agree on every valid triple of weight <= 10") {
        for (int n = 0; n <= 10; ++n)
            for (int a = 0; a <= n; ++a)
                for (const auto& alpha : partitions_of(a))
                    for (const auto& beta : partitions_of(n - a)) {
                        const auto product = lr_expand_product(alpha, beta);
                        for (const auto& [g, c] : product.terms())
                            CHECK(fiber_dim(alpha, beta, g) == fiber_dim_conj(alpha, beta, g));
                    }
    }
}

TEST_CASE("orbit dimensions") {
    CHECK(dim_orbit(Partition{1, 1, 1, 1}, 4) == 0);
    CHECK(dim_orbit(Partition{2, 1}, 3) == 4);
    CHECK(dim_orbit(Partition{5}, 5) == 20);
    CHECK(kind_of([] { dim_orbit(Partition{2, 1}, 4); }) == ErrorKind::WeightMismatch);
    for (int n = 0; n <= 5; ++n)
        for (const auto& g : partitions_of(n))
            CHECK(dim_orbit(g, n) == oracle::orbit_dim_by_commutator(g));
}

TEST_CASE("Schubert dimensions") {
    CHECK(dim_schubert(Partition{1}, 2) == 1);
    CHECK(dim_schubert(Partition{3, 3, 3}, 3) == 0);
    CHECK(dim_schubert(Partition{2, 1}, 3) == 4);
    CHECK(kind_of([] { dim_schubert(Partition{1, 1, 1}, 2); }) == ErrorKind::TooLong);
    for (int n = 1; n <= 6; ++n)
        for (int w = 0; w <= 8; ++w) {
            const auto all = partitions_of(w);
            for (const auto& lambda : all)
                for (const auto& mu : all) {
                    if (static_cast<int>(lambda.length()) > n || static_cast<int>(mu.length()) > n)
                        continue;
                    CHECK(dim_schubert(lambda, n) - dim_schubert(mu, n) == 2 * (n_stat(mu) - n_stat(lambda)));
                }
        }
}

TEST_CASE("DOT export") {
    const auto dot = to_dot(orbit_poset(Partition{2, 2}, Partition{1, 1}));
    CHECK(dot.find("\"[3,3]\"") != std::string::npos);
    CHECK(dot.find("\"[3,1,1,1]\"") != std::string::npos);
    CHECK(dot.find("dashed") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '{') == std::count(dot.begin(), dot.end(), '}'));
}
