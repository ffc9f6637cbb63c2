#include "doctest.h"

#include "oracles.hpp"
#include "orbitlr/error.hpp"
#include "orbitlr/lr.hpp"
#include "orbitlr/tableaux.hpp"

using namespace orbitlr;

TEST_CASE("known coefficients") {
    CHECK(lr_coeff(Partition{1, 1}, Partition{1}, Partition{2, 1}) == 1);
    CHECK(lr_coeff(Partition{1, 1}, Partition{1}, Partition{1, 1, 1}) == 1);
    CHECK(lr_coeff(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
    CHECK(lr_coeff(Partition{3, 2, 1}, Partition{3, 2, 1}, Partition{5, 3, 2, 1, 1}) == 4);
    CHECK(lr_coeff(Partition{2, 2}, Partition{1, 1}, Partition{3, 1, 1, 1}) == 0);
    CHECK(lr_coeff(Partition{2, 2}, Partition{1, 1}, Partition{2, 2, 2}) == 0);
}

TEST_CASE("out-of-range inputs give zero") {
    CHECK(lr_coeff(Partition{2}, Partition{1}, Partition{2, 2}) == 0);
    CHECK(lr_coeff(Partition{3}, Partition{1}, Partition{2, 2}) == 0);
    CHECK(lr_coeff(Partition{}, Partition{}, Partition{}) == 1);
    CHECK(lr_coeff(Partition{}, Partition{2, 1}, Partition{2, 1}) == 1);
}

TEST_CASE("Schur products") {
    SchurExpansion pieri;
    pieri.add(Partition{2}, 1);
    pieri.add(Partition{1, 1}, 1);
    CHECK(schur_expand_product(Partition{1}, Partition{1}) == pieri);

    SchurExpansion fig;
    fig.add(Partition{3, 3}, 1);
    fig.add(Partition{3, 2, 1}, 1);
    fig.add(Partition{2, 2, 1, 1}, 1);
    CHECK(schur_expand_product(Partition{2, 2}, Partition{1, 1}) == fig);

    const auto table = schur_expand_product(Partition{2, 1}, Partition{2, 1});
    CHECK(table.size() == 7);
    CHECK(table.coefficient(Partition{2, 2, 1, 1}) == 1);
    CHECK(table.coefficient(Partition{2, 2, 2}) == 1);
    CHECK(table.coefficient(Partition{3, 1, 1, 1}) == 1);
    CHECK(table.coefficient(Partition{3, 2, 1}) == 2);
    CHECK(table.coefficient(Partition{3, 3}) == 1);
    CHECK(table.coefficient(Partition{4, 1, 1}) == 1);
    CHECK(table.coefficient(Partition{4, 2}) == 1);
}

TEST_CASE("expansion invariants") {
    SchurExpansion e;
    e.add(Partition{2}, 3);
    e.add(Partition{2}, -3);
    CHECK(e.empty());
    // a fresh expansion adopts the weight of its first key
    SchurExpansion f;
    f.add(Partition{1}, 1);
    CHECK_THROWS_AS(f.add(Partition{2}, 1), Error);
}

TEST_CASE("Kostka numbers") {
    const std::vector<int> ones{1, 1, 1};
    CHECK(kostka_number(Partition{2, 1}, ones) == 2);
    const std::vector<int> two_one{2, 1};
    CHECK(kostka_number(Partition{2, 1}, two_one) == 1);
    CHECK(kostka_number(Partition{1, 1, 1}, two_one) == 0);
    const std::vector<int> with_zeros{1, 0, 1, 0, 1};
    CHECK(kostka_number(Partition{2, 1}, with_zeros) == 2);
    for (int n = 1; n <= 7; ++n) {
        const std::vector<int> standard(static_cast<std::size_t>(n), 1);
        for (const auto& lambda : partitions_of(n))
            CHECK(kostka_number(lambda, standard) == oracle::syt_by_permutations(lambda));
    }
}

TEST_CASE("oracle equivalence, symmetry, extremes and support") {
    for (const auto& [alpha, beta] : oracle::pairs_up_to(8)) {
        const auto oracle_side = schur_expand_product(alpha, beta);
        const auto tableau_side = lr_expand_product(alpha, beta);
        CHECK(oracle_side == tableau_side);
        const Partition top = sum_of(alpha, beta);
        const Partition bottom = union_of(alpha, beta);
        CHECK(lr_coeff(alpha, beta, top) == 1);
        CHECK(lr_coeff(alpha, beta, bottom) == 1);
        for (const auto& gamma : partitions_of(alpha.weight() + beta.weight())) {
            const auto c = lr_coeff(alpha, beta, gamma);
            CHECK(c == oracle_side.coefficient(gamma));
            CHECK(c == lr_coeff(beta, alpha, gamma));
            if (c > 0) {
                CHECK(dominates(gamma, bottom));
                CHECK(dominates(top, gamma));
            }
        }
    }
}

TEST_CASE("chain coefficients") {
    const std::vector<Partition> one{Partition{3, 1}};
    CHECK(chain_coeff(one, Partition{3, 1}) == 1);
    CHECK(chain_coeff(one, Partition{2, 2}) == 0);

    const std::vector<Partition> three_boxes{Partition{1}, Partition{1}, Partition{1}};
    CHECK(chain_coeff(three_boxes, Partition{3}) == 1);
    CHECK(chain_coeff(three_boxes, Partition{2, 1}) == 2);
    CHECK(chain_coeff(three_boxes, Partition{2, 1}) == syt_count_hook(Partition{2, 1}));
    CHECK_THROWS_AS(chain_coeff(three_boxes, Partition{2}), Error);

    const std::vector<Partition> none;
    CHECK(chain_coeff(none, Partition{}) == 1);

    SUBCASE("two blocks agree with lr_coeff") {
        for (const auto& [alpha, beta] : oracle::pairs_up_to(6)) {
            const std::vector<Partition> blocks{alpha, beta};
            for (const auto& gamma : partitions_of(alpha.weight() + beta.weight()))
                CHECK(chain_coeff(blocks, gamma) == lr_coeff(alpha, beta, gamma));
        }
    }

    SUBCASE("iterated products up to weight 7") {
        // all block lists of nonempty partitions with total weight <= 7
        std::vector<std::vector<Partition>> lists{{}};
        std::vector<std::vector<Partition>> frontier{{}};
        while (!frontier.empty()) {
            std::vector<std::vector<Partition>> grown;
            for (const auto& list : frontier) {
                int used = 0;
                for (const auto& b : list)
                    used += b.weight();
                for (int w = 1; used + w <= 7; ++w)
                    for (const auto& lambda : partitions_of(w)) {
                        auto next = list;
                        next.push_back(lambda);
                        grown.push_back(next);
                    }
            }
            lists.insert(lists.end(), grown.begin(), grown.end());
            frontier = std::move(grown);
        }
        int checked = 0;
        for (const auto& blocks : lists) {
            if (blocks.size() < 3)
                continue;
            int total = 0;
            for (const auto& b : blocks)
                total += b.weight();
            const auto expected = oracle::iterated_schur_product(blocks);
            for (const auto& gamma : partitions_of(total))
                CHECK(chain_coeff(blocks, gamma) == expected.coefficient(gamma));
            ++checked;
        }
        CHECK(checked > 100);
    }
}
