#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "invar/arith.hpp"
#include "oracles.hpp"

using namespace invar;

TEST_CASE("partition values") {
    CHECK(partition(0) == 1);
    CHECK(partition(1) == 1);
    CHECK(partition(5) == 7);
    CHECK(partition(10) == 42);
    CHECK(partition(25) == 1958);
    CHECK(partition(100) == mpz_class("190569292"));
    CHECK(partition(1000) == mpz_class("24061467864032622473692149727991"));
    CHECK_THROWS_AS(partition(-1), domain_error);
}

TEST_CASE("partition matches the listing oracle") {
    for (std::int64_t k = 0; k <= 25; ++k)
        CHECK(partition(k) == oracles::partition_by_listing(k));
}

TEST_CASE("partition matches the DP oracle up to 200") {
    for (std::int64_t k = 0; k <= 200; ++k)
        CHECK(partition(k) == oracles::partition_by_dp(k));
}

TEST_CASE("partition cache is usable from several threads") {
    PartitionCache cache;
    std::vector<std::thread> threads;
    std::vector<mpz_class> seen(8);
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&cache, &seen, t] { seen[t] = cache.value(300 + t % 3); });
    for (auto& th : threads)
        th.join();
    for (int t = 0; t < 8; ++t)
        CHECK(seen[t] == partition(300 + t % 3));
}

TEST_CASE("totient") {
    CHECK(totient(1) == 1);
    CHECK(totient(6) == 2);
    CHECK(totient(12) == 4);
    CHECK_THROWS_AS(totient(0), domain_error);
    for (std::int64_t k = 1; k <= 300; ++k)
        CHECK(totient(k) == oracles::totient_by_gcd(k));
}

TEST_CASE("totient is multiplicative on coprime pairs") {
    for (std::int64_t a = 1; a <= 100; ++a)
        for (std::int64_t b = 1; b <= 100 / a; ++b)
            if (std::gcd(a, b) == 1)
                CHECK(totient(a * b) == totient(a) * totient(b));
}

TEST_CASE("totient divisor sum") {
    for (std::int64_t k = 1; k <= 200; ++k) {
        std::int64_t sum = 0;
        for (std::int64_t d = 1; d <= k; ++d)
            if (k % d == 0)
                sum += totient(d);
        CHECK(sum == k);
    }
}

TEST_CASE("hardy-ramanujan ratios") {
    const auto ratio = [](std::int64_t k) { return partition(k).get_d() / hardy_ramanujan(k); };
    const double r100 = ratio(100);
    const double r1000 = ratio(1000);
    CHECK(r100 >= 0.9);
    CHECK(r100 <= 1.1);
    CHECK(r1000 >= 0.95);
    CHECK(r1000 <= 1.05);
    CHECK(std::abs(r1000 - 1.0) < std::abs(r100 - 1.0));
    CHECK_THROWS_AS(hardy_ramanujan(0), domain_error);
}

TEST_CASE("harris-wehlau closed form") {
    CHECK(harris_wehlau_count(5, 4) == 4);  // p(1) phi(5)
    CHECK(harris_wehlau_count(3, 3) == 2);  // p(0) phi(3)
    CHECK(harris_wehlau_count(6, 4) == 4);  // p(2) phi(6)
    CHECK_THROWS_AS(harris_wehlau_count(6, 3), domain_error); // below threshold
    CHECK_THROWS_AS(harris_wehlau_count(5, 6), domain_error); // k > n
    CHECK_THROWS_AS(harris_wehlau_count(0, 1), domain_error);
}

TEST_CASE("binomial and isqrt") {
    CHECK(binomial(4, 4) == 1);
    CHECK(binomial(5, 3) == 10);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(100, 30) == mpz_class("29372339821610944823963760"));
    for (std::int64_t x = 0; x <= 1000; ++x) {
        const std::int64_t s = isqrt(x);
        CHECK(s * s <= x);
        CHECK((s + 1) * (s + 1) > x);
    }
}
