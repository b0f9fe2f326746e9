#include "invar/arith.hpp"

#include <cmath>

namespace invar {

PartitionCache::PartitionCache() {
    values_.emplace_back(1); // p(0)
}

mpz_class PartitionCache::value(std::size_t k) {
    std::scoped_lock lock(mutex_);
    if (k >= values_.size())
        grow_to(k);
    return values_[k];
}

std::size_t PartitionCache::high_water() const {
    std::scoped_lock lock(mutex_);
    return values_.size() - 1;
}

void PartitionCache::grow_to(std::size_t k) {
    // p(m) = sum_{j>=1} (-1)^{j-1} [ p(m - j(3j-1)/2) + p(m - j(3j+1)/2) ]
    for (std::size_t m = values_.size(); m <= k; ++m) {
        mpz_class acc = 0;
        for (std::size_t j = 1;; ++j) {
            const std::size_t g1 = j * (3 * j - 1) / 2;
            if (g1 > m)
                break;
            const bool add = (j % 2 == 1);
            if (add)
                acc += values_[m - g1];
            else
                acc -= values_[m - g1];
            const std::size_t g2 = j * (3 * j + 1) / 2;
            if (g2 <= m) {
                if (add)
                    acc += values_[m - g2];
                else
                    acc -= values_[m - g2];
            }
        }
        values_.push_back(acc);
    }
}

PartitionCache& PartitionCache::shared() {
    static PartitionCache cache;
    return cache;
}

mpz_class partition(std::int64_t k) {
    if (k < 0)
        throw domain_error("partition: k must be nonnegative");
    return PartitionCache::shared().value(static_cast<std::size_t>(k));
}

std::int64_t totient(std::int64_t k) {
    if (k < 1)
        throw domain_error("totient: k must be positive");
    std::int64_t result = k;
    std::int64_t m = k;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0)
                m /= p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

double hardy_ramanujan(std::int64_t k) {
    if (k < 1)
        throw domain_error("hardy_ramanujan: k must be positive");
    const long double kk = static_cast<long double>(k);
    const long double pi = 3.14159265358979323846264338327950288L;
    const long double value =
        std::exp(pi * std::sqrt(2.0L * kk / 3.0L)) / (4.0L * std::sqrt(3.0L) * kk);
    return static_cast<double>(value);
}

mpz_class harris_wehlau_count(std::int64_t n, std::int64_t k) {
    if (n < 1 || k < 1 || k > n)
        throw domain_error("harris_wehlau_count: need 1 <= k <= n");
    const std::int64_t threshold = (n + 1) / 2 + 1; // ceil(n/2) + 1
    if (k < threshold)
        throw domain_error("harris_wehlau_count: the closed form requires "
                           "k >= ceil(n/2) + 1; below that degree the count "
                           "is not given by p(n-k)*phi(n)");
    return partition(n - k) * totient(n);
}

mpz_class binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n)
        return 0;
    mpz_class result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return result;
}

std::int64_t isqrt(std::int64_t x) {
    if (x < 0)
        throw domain_error("isqrt: negative argument");
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (s > 0 && s * s > x)
        --s;
    while ((s + 1) * (s + 1) <= x)
        ++s;
    return s;
}

} // namespace invar
