#ifndef INVAR_ARITH_HPP
#define INVAR_ARITH_HPP

#include <cstdint>
#include <mutex>
#include <vector>

#include <gmpxx.h>

#include "invar/errors.hpp"

namespace invar {

/// Cache of partition numbers p(0..N), grown on demand by Euler's
/// pentagonal-number recurrence.  Growth happens under a single writer;
/// concurrent readers of already-published entries go through value().
class PartitionCache {
public:
    PartitionCache();

    /// p(k); extends the cache if k is above the current high-water mark.
    mpz_class value(std::size_t k);

    std::size_t high_water() const;

    /// Process-wide shared cache.
    static PartitionCache& shared();

private:
    void grow_to(std::size_t k);

    mutable std::mutex mutex_;
    std::vector<mpz_class> values_;
};

/// Number of partitions of k (p(0) = 1), via the shared PartitionCache.
mpz_class partition(std::int64_t k);

/// Euler's totient by trial factorization; phi(1) = 1.
std::int64_t totient(std::int64_t k);

/// The Hardy-Ramanujan asymptotic (1 / (4 sqrt(3) k)) * e^{pi sqrt(2k/3)}.
double hardy_ramanujan(std::int64_t k);

/// p(n-k) * phi(n).  Requires 1 <= k <= n and k >= ceil(n/2) + 1; outside
/// that range the closed form is not claimed and a domain_error is thrown.
mpz_class harris_wehlau_count(std::int64_t n, std::int64_t k);

/// Exact binomial coefficient C(n, k); 0 when k < 0 or k > n.
mpz_class binomial(std::int64_t n, std::int64_t k);

/// Largest s with s*s <= x (x >= 0).
std::int64_t isqrt(std::int64_t x);

} // namespace invar

#endif
