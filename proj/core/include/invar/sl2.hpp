#ifndef INVAR_SL2_HPP
#define INVAR_SL2_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "invar/errors.hpp"

namespace invar {

/// Coefficients of the Gaussian binomial [n+d choose d]_q, degree 0..n*d.
/// Coefficient w counts partitions of w into at most d parts, each <= n.
std::vector<mpz_class> gaussian_binomial(std::int64_t d, std::int64_t n);

/// Partitions of w into at most max_parts parts, each <= max_part.
mpz_class restricted_partitions(std::int64_t w, std::int64_t max_parts,
                                std::int64_t max_part);

/// a_n(d) = dim S^d(V_n)^{SL2}: 0 when nd is odd, otherwise the weight-0
/// multiplicity minus the weight-2 multiplicity in S^d(V_n),
///   restricted_partitions(nd/2, d, n) - restricted_partitions(nd/2 - 1, d, n).
mpz_class invariant_dim(std::int64_t n, std::int64_t d);

/// Independent oracle: enumerates the degree-d monomials in the n+1
/// variables of weights n, n-2, ..., -n and counts weight 0 minus weight 2.
mpz_class invariant_dim_bruteforce(std::int64_t n, std::int64_t d,
                                   std::uint64_t work_budget = 100'000'000);

struct SeriesTable {
    std::int64_t n_min = 0, n_max = 0, d_min = 0, d_max = 0;
    std::vector<std::vector<mpz_class>> values; // [n - n_min][d - d_min]

    const mpz_class& at(std::int64_t n, std::int64_t d) const;
};

SeriesTable series_table(std::int64_t n_min, std::int64_t n_max, std::int64_t d_min,
                         std::int64_t d_max);

struct ReciprocityReport {
    std::int64_t n_max = 0, d_max = 0;
    struct Violation {
        std::int64_t n, d;
        mpz_class a_nd, a_dn;
    };
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks a_n(d) == a_d(n) for all 1 <= n, d <= the given limits.
ReciprocityReport reciprocity_check(std::int64_t n_max, std::int64_t d_max);

/// a_n(d) - sum_{i=1}^{floor(d/2)} a_n(i) a_n(d-i); may be negative.
mpz_class generator_lower_bound(std::int64_t n, std::int64_t d);

struct GrowthDiagnostic {
    std::int64_t d = 0, n_max = 0;
    struct Sample {
        std::int64_t n;
        mpz_class dim;            // a_n(d)
        mpz_class lower_bound;    // generator lower bound, raw (may be <= 0)
        double dim_ratio;         // a_n(d) / n^{d-3}
        double lb_ratio;          // lower_bound / n^{d-3}
    };
    std::vector<Sample> samples;  // n with nd even, ascending
    std::int64_t fit_min = 0, fit_max = 0;
    double slope = 0.0;           // least-squares slope of log a vs log n
};

/// Samples every n <= n_max with nd even.  The slope is fitted over
/// [fit_min, n_max]; by default fit_min is n_max/sqrt(10), the largest
/// half-decade.
GrowthDiagnostic growth_diagnostic(std::int64_t d, std::int64_t n_max,
                                   std::optional<std::int64_t> fit_min = std::nullopt);

/// dim V_n // SL2 = n - 2 for n >= 3.
std::int64_t quotient_dim(std::int64_t n);

/// p(n-2) + phi(n-2) - 1 for odd n >= 3.
mpz_class kac_lower_bound(std::int64_t n);

} // namespace invar

#endif
