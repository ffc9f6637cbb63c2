#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "orbitlr/error.hpp"
#include "orbitlr/hall.hpp"
#include "orbitlr/lr.hpp"
#include "orbitlr/orbit.hpp"

using namespace orbitlr;

namespace {

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

TEST_CASE("modules") {
    const FiniteModule m(Partition{3, 1}, 5);
    CHECK(m.dimension() == 4);
    CHECK(m.q() == 5);
    const auto t = m.operator_matrix();
    CHECK(jordan_type(t) == Partition{3, 1});
    auto power = t;
    for (int k = 1; k < 3; ++k)
        power = power * t;
    CHECK(power.is_zero());
    CHECK(m.apply({1, 2, 3, 4}) == std::vector<std::uint64_t>{2, 3, 0, 0});
    CHECK_THROWS_AS(FiniteModule(Partition{1}, 6), Error);
}

TEST_CASE("Gaussian binomials") {
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(3, 1, 3) == 13);
    CHECK(gaussian_binomial(5, 0, 7) == 1);
    CHECK(gaussian_binomial(5, 5, 7) == 1);
    CHECK(gaussian_binomial(2, 3, 7) == 0);
}

TEST_CASE("invariant subspaces") {
    CHECK(invariant_subspaces(FiniteModule(Partition{1}, 7)).size() == 2);
    CHECK(invariant_subspaces(FiniteModule(Partition{1, 1}, 3)).size() == 6);
    for (std::uint64_t q : {2, 3, 5})
        CHECK(invariant_subspaces(FiniteModule(Partition{2}, q)).size() == 3);

    SUBCASE("canonical and duplicate-free") {
        const FiniteModule m(Partition{2, 1, 1}, 2);
        const auto subs = invariant_subspaces(m);
        std::set<std::vector<std::vector<std::uint64_t>>> seen;
        for (const auto& s : subs)
            seen.insert(s.basis);
        CHECK(seen.size() == subs.size());
    }

    SUBCASE("trivial operator: every subspace counts") {
        for (std::uint64_t q : {2, 3})
            for (int n = 1; n <= 4; ++n) {
                std::uint64_t total = 0;
                for (int k = 0; k <= n; ++k)
                    total += gaussian_binomial(n, k, q);
                CHECK(invariant_subspaces(FiniteModule(Partition(std::vector<int>(n, 1)), q)).size() == total);
            }
    }

    CHECK(kind_of([] { invariant_subspaces(FiniteModule(Partition{3, 2}, 3), 100); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("Hall numbers") {
    for (std::uint64_t q : {2, 3, 5})
        CHECK(hall_number(Partition{1}, Partition{1}, Partition{2}, q) == 1);
    CHECK(hall_number(Partition{1}, Partition{1}, Partition{1, 1}, 3) == 4);
    CHECK(hall_number(Partition{1}, Partition{1}, Partition{1, 1}, 2) == 3);
    CHECK(kind_of([] { hall_number(Partition{1}, Partition{1}, Partition{3}, 2); }) == ErrorKind::WeightMismatch);
    CHECK(kind_of([] { hall_number(Partition{2, 1}, Partition{1, 1}, Partition{2, 2, 1}, 7, 10); }) ==
          ErrorKind::BudgetExceeded);
}

TEST_CASE("Hall numbers against a direct census") {
    // every invariant subspace classified by submodule and quotient type
    for (std::uint64_t q : {2, 3})
        for (int n = 0; n <= 4; ++n)
            for (const auto& gamma : partitions_of(n)) {
                const FiniteModule m(gamma, q);
                const auto subs = invariant_subspaces(m);
                std::map<std::pair<Partition, Partition>, std::int64_t> census;
                for (const auto& s : subs)
                    ++census[{submodule_type(m, s), quotient_type(m, s)}];
                std::int64_t total = 0;
                for (int a = 0; a <= n; ++a)
                    for (const auto& alpha : partitions_of(a))
                        for (const auto& beta : partitions_of(n - a)) {
                            const auto h = hall_number(alpha, beta, gamma, q);
                            total += h;
                            auto it = census.find({alpha, beta});
                            CHECK(h == (it == census.end() ? 0 : it->second));
                        }
                CHECK(total == static_cast<std::int64_t>(subs.size()));
            }
}

TEST_CASE("existence matches the LR support") {
    for (int n = 0; n <= 5; ++n)
        for (const auto& gamma : partitions_of(n))
            for (int a = 0; a <= n; ++a)
                for (const auto& alpha : partitions_of(a))
                    for (const auto& beta : partitions_of(n - a)) {
                        const bool some = hall_number(alpha, beta, gamma, 2, 100'000'000) > 0 ||
                                          hall_number(alpha, beta, gamma, 3, 100'000'000) > 0;
                        CHECK(some == (lr_coeff(alpha, beta, gamma) > 0));
                    }
}

TEST_CASE("Hall polynomials") {
    const auto line = hall_polynomial(Partition{1}, Partition{1}, Partition{1, 1});
    CHECK(line.coeffs == std::vector<std::int64_t>{1, 1});
    CHECK(line.to_string() == "q + 1");
    CHECK(line.evaluate(7) == 8);

    const auto constant = hall_polynomial(Partition{1}, Partition{1}, Partition{2});
    CHECK(constant.coeffs == std::vector<std::int64_t>{1});
    CHECK(constant.to_string() == "1");

    const auto zero = hall_polynomial(Partition{2, 2}, Partition{1, 1}, Partition{2, 2, 2});
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero.to_string() == "0");

    CHECK(kind_of([] { hall_polynomial(Partition{1}, Partition{1}, Partition{1}); }) == ErrorKind::WeightMismatch);

    SUBCASE("degree and top coefficient through weight 4") {
        for (int n = 0; n <= 4; ++n)
            for (const auto& gamma : partitions_of(n))
                for (int a = 0; a <= n; ++a)
                    for (const auto& alpha : partitions_of(a))
                        for (const auto& beta : partitions_of(n - a)) {
                            const auto h = hall_polynomial(alpha, beta, gamma, 100'000'000);
                            const auto c = lr_coeff(alpha, beta, gamma);
                            CHECK(h.is_zero() == (c == 0));
                            if (c > 0) {
                                CHECK(h.degree() == fiber_dim(alpha, beta, gamma));
                                CHECK(h.leading() == c);
                            }
                            // the polynomial reproduces a count it was not fitted to
                            CHECK(h.evaluate(13) == hall_number(alpha, beta, gamma, 13, 100'000'000));
                        }
    }
}

TEST_CASE("first primes") {
    CHECK(first_primes(6) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13});
    CHECK(first_primes(0).empty());
}
