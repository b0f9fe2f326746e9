#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "invar/congruence.hpp"
#include "oracles.hpp"

using namespace invar;
using i64 = std::int64_t;

namespace {

ExponentVector ev(std::vector<i64> exps) { return ExponentVector(std::move(exps)); }

std::vector<std::vector<i64>> raw(const HilbertBasis& basis) {
    std::vector<std::vector<i64>> out;
    for (const auto& e : basis.elements)
        out.push_back(e.exponents());
    return out;
}

bool dominates(const ExponentVector& small, const ExponentVector& big) {
    for (std::size_t i = 0; i < small.size(); ++i)
        if (small[i] > big[i])
            return false;
    return true;
}

// deterministic platform-independent draws
struct Rng {
    std::mt19937_64 gen{0xB45E5u};
    i64 operator()(i64 lo, i64 hi) {
        return lo + static_cast<i64>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

} // namespace

TEST_CASE("system construction and validation") {
    CHECK_THROWS_AS(CongruenceSystem({}, 3), parameter_error);
    CHECK_THROWS_AS(CongruenceSystem({1, 2}, -1), parameter_error);
    CHECK_THROWS_AS(ev({1, -1}), parameter_error);

    const CongruenceSystem sys({7, -3, 12}, 5);
    CHECK(sys.reduced_weights() == std::vector<i64>{2, 2, 2});
    CHECK(sys.default_degree_cap() == 5);

    const CongruenceSystem free_sys({3, -2}, 0);
    CHECK(free_sys.default_degree_cap() == 5);
    CHECK(CongruenceSystem({1, -1}, 0).default_degree_cap() == 2);
    CHECK(CongruenceSystem({0, 0}, 0).default_degree_cap() == 1);
}

TEST_CASE("kac systems") {
    CHECK(kac_system(3).weights() == std::vector<i64>{1, 2});
    CHECK(kac_system(3).modulus() == 3);
    CHECK(kac_system(2).weights() == std::vector<i64>{1});
    CHECK(kac_system(5).weights() == std::vector<i64>{1, 2, 3, 4});
    CHECK(kac_system(5).is_kac());
    CHECK_FALSE(CongruenceSystem({1, 3}, 4).is_kac());
    CHECK_THROWS_AS(kac_system(1), parameter_error);
}

TEST_CASE("is_solution") {
    const CongruenceSystem mod3({1, 2}, 3);
    CHECK(is_solution(mod3, ev({1, 1})));
    CHECK(is_solution(mod3, ev({0, 0})));
    CHECK_FALSE(is_solution(mod3, ev({1, 0})));
    CHECK(is_solution(CongruenceSystem({1, 2, 3, -3}, 0), ev({1, 1, 0, 1})));
    CHECK_THROWS_AS(is_solution(mod3, ev({1, 1, 1})), dimension_error);
}

TEST_CASE("is_indecomposable matches the sub-solution definition") {
    const CongruenceSystem mod3({1, 2}, 3);
    CHECK(is_indecomposable(mod3, ev({1, 1})));
    CHECK_FALSE(is_indecomposable(mod3, ev({2, 2})));
    CHECK(is_indecomposable(mod3, ev({3, 0})));
    CHECK_THROWS_AS(is_indecomposable(mod3, ev({0, 0})), domain_error);
    CHECK_THROWS_AS(is_indecomposable(mod3, ev({1, 0})), domain_error);
}

TEST_CASE("indecomposability agrees with the two-nonzero-summands definition") {
    Rng rng;
    for (int trial = 0; trial < 40; ++trial) {
        const i64 r = rng(1, 4);
        const i64 modulus = rng(1, 8);
        std::vector<i64> weights;
        for (i64 i = 0; i < r; ++i)
            weights.push_back(rng(0, modulus - 1));
        const CongruenceSystem sys(weights, modulus);

        std::vector<ExponentVector> solutions;
        oracles::all_solutions(sys, sys.default_degree_cap(), solutions);
        for (const auto& v : solutions)
            CHECK(is_indecomposable(sys, v) ==
                  !oracles::decomposable_by_pairs(sys, v, solutions));
    }
}

TEST_CASE("hilbert basis frozen examples") {
    CHECK(raw(hilbert_basis(kac_system(3))) ==
          std::vector<std::vector<i64>>{{1, 1}, {0, 3}, {3, 0}});
    CHECK(raw(hilbert_basis(CongruenceSystem({1, 2, 3, -3}, 0))) ==
          std::vector<std::vector<i64>>{
              {0, 0, 1, 1}, {1, 1, 0, 1}, {3, 0, 0, 1}, {0, 3, 0, 2}});
    CHECK(raw(hilbert_basis(CongruenceSystem({0}, 1))) ==
          std::vector<std::vector<i64>>{{1}});
    CHECK(raw(hilbert_basis_bruteforce(CongruenceSystem({1}, 2), 2)) ==
          std::vector<std::vector<i64>>{{2}});
    CHECK(raw(hilbert_basis_bruteforce(CongruenceSystem({1}, 1), 1)) ==
          std::vector<std::vector<i64>>{{1}});
    CHECK_THROWS_AS(hilbert_basis(kac_system(3), 0), parameter_error);
    CHECK_THROWS_AS(hilbert_basis_bruteforce(kac_system(3), -1), parameter_error);
}

TEST_CASE("basis output is canonical, antichain, and consistent") {
    for (i64 n : {4, 5, 6, 9, 12}) {
        const HilbertBasis basis = hilbert_basis(kac_system(n));
        CHECK(basis.complete_to_degree == n);

        std::size_t counted = 0;
        for (const auto& [degree, count] : basis.counts_by_degree) {
            CHECK(degree >= 1);
            counted += count;
        }
        CHECK(counted == basis.elements.size());

        for (std::size_t i = 0; i + 1 < basis.elements.size(); ++i)
            CHECK(canonical_less(basis.elements[i], basis.elements[i + 1]));

        for (const auto& e : basis.elements) {
            CHECK(is_solution(basis.system, e));
            CHECK(is_indecomposable(basis.system, e));
            for (std::size_t i = 0; i < e.size(); ++i)
                CHECK(e[i] <= n); // extremal-subtraction coordinate bound
        }
        for (std::size_t i = 0; i < basis.elements.size(); ++i)
            for (std::size_t j = 0; j < basis.elements.size(); ++j)
                if (i != j)
                    CHECK_FALSE(dominates(basis.elements[i], basis.elements[j]));

        // n e_i is always a solution
        for (std::size_t i = 0; i < basis.system.rank(); ++i) {
            std::vector<i64> x(basis.system.rank(), 0);
            x[i] = n;
            CHECK(is_solution(basis.system, ev(std::move(x))));
        }
    }
}

TEST_CASE("oracle equivalence on an exhaustive small grid") {
    for (i64 modulus = 1; modulus <= 5; ++modulus)
        for (i64 w1 = 0; w1 < modulus; ++w1)
            for (i64 w2 = 0; w2 < modulus; ++w2) {
                const CongruenceSystem sys({w1, w2}, modulus);
                CHECK(hilbert_basis(sys).elements ==
                      hilbert_basis_bruteforce(sys, modulus).elements);
            }
}

TEST_CASE("oracle equivalence on random systems") {
    Rng rng;
    for (int trial = 0; trial < 60; ++trial) {
        const i64 r = rng(1, 6);
        const i64 modulus = rng(1, 12);
        std::vector<i64> weights;
        for (i64 i = 0; i < r; ++i)
            weights.push_back(rng(-12, 12));
        const CongruenceSystem sys(weights, modulus);
        CHECK(hilbert_basis(sys).elements ==
              hilbert_basis_bruteforce(sys, modulus).elements);
    }
    for (int trial = 0; trial < 40; ++trial) {
        const i64 r = rng(2, 4);
        std::vector<i64> weights{rng(1, 4), -rng(1, 4)};
        for (i64 i = 2; i < r; ++i)
            weights.push_back(rng(-4, 4));
        const CongruenceSystem sys(weights, 0);
        CHECK(hilbert_basis(sys).elements ==
              hilbert_basis_bruteforce(sys, sys.default_degree_cap()).elements);
    }
}

TEST_CASE("every solution decomposes over the basis") {
    const auto decomposes = [](const std::vector<ExponentVector>& basis,
                               const ExponentVector& v) {
        auto rec = [&](auto&& self, const std::vector<i64>& rest) -> bool {
            bool zero = true;
            for (i64 x : rest)
                zero = zero && x == 0;
            if (zero)
                return true;
            for (const auto& b : basis) {
                bool fits = true;
                for (std::size_t i = 0; i < rest.size(); ++i)
                    fits = fits && b[i] <= rest[i];
                if (!fits)
                    continue;
                std::vector<i64> next(rest);
                for (std::size_t i = 0; i < rest.size(); ++i)
                    next[i] -= b[i];
                if (self(self, next))
                    return true;
            }
            return false;
        };
        return rec(rec, v.exponents());
    };

    for (i64 n : {3, 4, 5, 6, 7}) {
        const CongruenceSystem sys = kac_system(n);
        const HilbertBasis basis = hilbert_basis(sys);
        std::vector<ExponentVector> solutions;
        oracles::all_solutions(sys, n, solutions);
        for (const auto& v : solutions)
            CHECK(decomposes(basis.elements, v));
    }
}

TEST_CASE("decomposable iff dominated by a basis element") {
    const CongruenceSystem sys = kac_system(6);
    const HilbertBasis basis = hilbert_basis(sys);
    std::vector<ExponentVector> solutions;
    oracles::all_solutions(sys, 6, solutions);
    for (const auto& v : solutions) {
        bool dominated = false;
        for (const auto& b : basis.elements)
            dominated = dominated || (!(b == v) && dominates(b, v));
        CHECK(is_indecomposable(sys, v) == !dominated);
    }
}

TEST_CASE("no indecomposable hides above the degree cap") {
    for (i64 n = 2; n <= 12; ++n) {
        const HilbertBasis doubled = hilbert_basis(kac_system(n), 2 * n);
        for (const auto& e : doubled.elements)
            CHECK(e.degree() <= n);
    }
    for (i64 n = 2; n <= 10; ++n) {
        const HilbertBasis doubled = hilbert_basis_bruteforce(kac_system(n), 2 * n);
        for (const auto& e : doubled.elements)
            CHECK(e.degree() <= n);
    }
}

TEST_CASE("worker count does not change the result") {
    const CongruenceSystem sys = kac_system(11);
    const HilbertBasis serial = hilbert_basis(sys);
    for (unsigned workers : {2u, 3u, 8u}) {
        SearchOptions opt;
        opt.workers = workers;
        CHECK(hilbert_basis(sys, std::nullopt, opt).elements == serial.elements);
    }
    CHECK(hilbert_basis(sys).elements == serial.elements); // repeated run
}

TEST_CASE("work budget failure is loud") {
    SearchOptions opt;
    opt.work_budget = 50;
    CHECK_THROWS_AS(hilbert_basis(kac_system(12), std::nullopt, opt), resource_error);
    CHECK_THROWS_AS(hilbert_basis_bruteforce(kac_system(12), 12, 1000), resource_error);
    CHECK_THROWS_AS(max_zero_sum_free(30, 100), resource_error);
}

TEST_CASE("counts by degree and the even-threshold reality") {
    CHECK(indecomposables_in_degree(kac_system(5), 4) == 4);
    CHECK(indecomposables_in_degree(kac_system(3), 3) == 2);
    CHECK(indecomposables_in_degree(kac_system(3), 1) == 0);
    // at k = n/2 + 1 with n even the closed form p(n-k)phi(n) misses the
    // index-2 orbits; the enumerated counts below are the exact values
    CHECK(indecomposables_in_degree(kac_system(6), 4) == 6);
    CHECK(indecomposables_in_degree(kac_system(8), 5) == 16);
    CHECK(indecomposables_in_degree(kac_system(6), 5) == 2);
    CHECK_THROWS_AS(indecomposables_in_degree(kac_system(5), 0), parameter_error);
}

TEST_CASE("zero subset sums") {
    CHECK(has_zero_subset_sum({1, 2}, 3));
    CHECK_FALSE(has_zero_subset_sum({1, 2}, 5));
    CHECK(has_zero_subset_sum({0}, 7));
    CHECK_THROWS_AS(has_zero_subset_sum({1}, 0), parameter_error);
    CHECK_THROWS_AS(has_zero_subset_sum({}, 5), parameter_error);
}

TEST_CASE("max zero-sum-free set sizes") {
    CHECK(max_zero_sum_free(3) == 1);
    CHECK(max_zero_sum_free(4) == 2);
    CHECK(max_zero_sum_free(5) == 2);
    CHECK_THROWS_AS(max_zero_sum_free(1), parameter_error);

    // powerset cross-check
    for (i64 n = 2; n <= 14; ++n) {
        std::size_t best = 0;
        for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
            std::vector<i64> subset;
            for (i64 v = 1; v < n; ++v)
                if (mask & (1u << (v - 1)))
                    subset.push_back(v);
            bool zero_sum = false;
            for (std::uint32_t sub = 1; sub < (1u << subset.size()); ++sub) {
                i64 total = 0;
                for (std::size_t i = 0; i < subset.size(); ++i)
                    if (sub & (1u << i))
                        total += subset[i];
                if (total % n == 0)
                    zero_sum = true;
            }
            if (!zero_sum)
                best = std::max(best, subset.size());
        }
        CHECK(max_zero_sum_free(n) == best);
    }
}

TEST_CASE("olson reports") {
    const OlsonReport five = verify_olson(5);
    CHECK(five.max_size == 2);
    CHECK(five.threshold == doctest::Approx(6.7082039));
    CHECK(five.pass);

    const OlsonReport four = verify_olson(4);
    CHECK(four.max_size == 2);
    CHECK(four.threshold == doctest::Approx(6.0));
    CHECK(four.pass);

    const OlsonReport nine = verify_olson(9);
    CHECK(nine.threshold == doctest::Approx(9.0));
    CHECK(nine.pass);
    CHECK(!nine.witness.empty());
    CHECK_FALSE(has_zero_subset_sum(nine.witness, 9));
}
