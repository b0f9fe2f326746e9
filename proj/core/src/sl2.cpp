#include "invar/sl2.hpp"

#include <atomic>
#include <cmath>

#include "invar/arith.hpp"

namespace invar {

std::vector<mpz_class> gaussian_binomial(std::int64_t d, std::int64_t n) {
    if (d < 0 || n < 0)
        throw domain_error("gaussian_binomial: arguments must be nonnegative");
    // [n+i choose i]_q = [n+i-1 choose i-1]_q (1 - q^{n+i}) / (1 - q^i);
    // every intermediate is again a Gaussian binomial, so the division is
    // exact over the integers.
    std::vector<mpz_class> c(static_cast<std::size_t>(n * d) + 1, 0);
    c[0] = 1;
    std::int64_t deg = 0;
    for (std::int64_t i = 1; i <= d; ++i) {
        const std::int64_t next_deg = deg + n;
        // multiply by (1 - q^{n+i})
        for (std::int64_t j = next_deg; j >= n + i; --j)
            c[j] -= c[j - (n + i)];
        // divide by (1 - q^i): prefix sums with stride i
        for (std::int64_t j = i; j <= next_deg; ++j)
            c[j] += c[j - i];
        deg = next_deg;
    }
    return c;
}

mpz_class restricted_partitions(std::int64_t w, std::int64_t max_parts,
                                std::int64_t max_part) {
    if (max_parts < 0 || max_part < 0)
        throw domain_error("restricted_partitions: bounds must be nonnegative");
    if (w < 0 || w > max_parts * max_part)
        return 0;
    return gaussian_binomial(max_parts, max_part)[static_cast<std::size_t>(w)];
}

mpz_class invariant_dim(std::int64_t n, std::int64_t d) {
    if (n < 0 || d < 0)
        throw domain_error("invariant_dim: arguments must be nonnegative");
    if ((n * d) % 2 != 0)
        return 0;
    const std::int64_t half = n * d / 2;
    const std::vector<mpz_class> g = gaussian_binomial(d, n);
    mpz_class result = g[static_cast<std::size_t>(half)];
    if (half >= 1)
        result -= g[static_cast<std::size_t>(half - 1)];
    return result;
}

namespace {

void count_weighted_multisets(std::int64_t n, std::int64_t d, std::int64_t weight_idx,
                              std::int64_t remaining, std::int64_t weight_sum,
                              std::uint64_t& visited, std::uint64_t budget,
                              mpz_class& zero, mpz_class& two) {
    if (++visited > budget)
        throw resource_error("invariant_dim_bruteforce: work budget exceeded");
    // weights n - 2*weight_idx for weight_idx = 0..n
    if (weight_idx == n) {
        // last weight is -n; the multiset is forced
        weight_sum += -n * remaining;
        if (weight_sum == 0)
            zero += 1;
        else if (weight_sum == 2)
            two += 1;
        return;
    }
    const std::int64_t w = n - 2 * weight_idx;
    for (std::int64_t c = 0; c <= remaining; ++c)
        count_weighted_multisets(n, d, weight_idx + 1, remaining - c,
                                 weight_sum + w * c, visited, budget, zero, two);
}

} // namespace

mpz_class invariant_dim_bruteforce(std::int64_t n, std::int64_t d,
                                   std::uint64_t work_budget) {
    if (n < 0 || d < 0)
        throw domain_error("invariant_dim_bruteforce: arguments must be nonnegative");
    mpz_class zero = 0, two = 0;
    std::uint64_t visited = 0;
    count_weighted_multisets(n, d, 0, d, 0, visited, work_budget, zero, two);
    return zero - two;
}

const mpz_class& SeriesTable::at(std::int64_t n, std::int64_t d) const {
    if (n < n_min || n > n_max || d < d_min || d > d_max)
        throw parameter_error("SeriesTable::at: index out of range");
    return values[static_cast<std::size_t>(n - n_min)][static_cast<std::size_t>(d - d_min)];
}

SeriesTable series_table(std::int64_t n_min, std::int64_t n_max, std::int64_t d_min,
                         std::int64_t d_max) {
    if (n_min < 0 || d_min < 0 || n_max < n_min || d_max < d_min)
        throw parameter_error("series_table: invalid ranges");
    SeriesTable table{n_min, n_max, d_min, d_max, {}};
    table.values.reserve(static_cast<std::size_t>(n_max - n_min + 1));
    for (std::int64_t n = n_min; n <= n_max; ++n) {
        std::vector<mpz_class> row;
        row.reserve(static_cast<std::size_t>(d_max - d_min + 1));
        for (std::int64_t d = d_min; d <= d_max; ++d)
            row.push_back(invariant_dim(n, d));
        table.values.push_back(std::move(row));
    }
    return table;
}

ReciprocityReport reciprocity_check(std::int64_t n_max, std::int64_t d_max) {
    if (n_max < 1 || d_max < 1)
        throw parameter_error("reciprocity_check: limits must be at least 1");
    ReciprocityReport report{n_max, d_max, {}};
    const std::int64_t m = std::max(n_max, d_max);
    const SeriesTable table = series_table(1, m, 1, m);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        for (std::int64_t d = 1; d <= d_max; ++d) {
            const mpz_class& a_nd = table.at(n, d);
            const mpz_class& a_dn = table.at(d, n);
            if (a_nd != a_dn)
                report.violations.push_back({n, d, a_nd, a_dn});
        }
    }
    return report;
}

mpz_class generator_lower_bound(std::int64_t n, std::int64_t d) {
    if (n < 1 || d < 1)
        throw domain_error("generator_lower_bound: n, d must be at least 1");
    mpz_class result = invariant_dim(n, d);
    for (std::int64_t i = 1; i <= d / 2; ++i)
        result -= invariant_dim(n, i) * invariant_dim(n, d - i);
    return result;
}

GrowthDiagnostic growth_diagnostic(std::int64_t d, std::int64_t n_max,
                                   std::optional<std::int64_t> fit_min) {
    if (d < 1 || n_max < 2)
        throw parameter_error("growth_diagnostic: need d >= 1 and n_max >= 2");
    GrowthDiagnostic diag;
    diag.d = d;
    diag.n_max = n_max;
    diag.fit_max = n_max;
    diag.fit_min = fit_min.value_or(
        static_cast<std::int64_t>(std::ceil(static_cast<double>(n_max) / std::sqrt(10.0))));

    for (std::int64_t n = 2; n <= n_max; ++n) {
        if ((n * d) % 2 != 0)
            continue;
        GrowthDiagnostic::Sample s;
        s.n = n;
        s.dim = invariant_dim(n, d);
        s.lower_bound = generator_lower_bound(n, d);
        const double scale = std::pow(static_cast<double>(n), static_cast<double>(d - 3));
        s.dim_ratio = s.dim.get_d() / scale;
        s.lb_ratio = s.lower_bound.get_d() / scale;
        diag.samples.push_back(std::move(s));
    }

    // least squares of log a_n(d) against log n over the fit window
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t count = 0;
    for (const auto& s : diag.samples) {
        if (s.n < diag.fit_min || s.dim <= 0)
            continue;
        const double x = std::log(static_cast<double>(s.n));
        const double y = std::log(s.dim.get_d());
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    if (count >= 2) {
        const double k = static_cast<double>(count);
        diag.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    }
    return diag;
}

std::int64_t quotient_dim(std::int64_t n) {
    if (n < 3)
        throw domain_error("quotient_dim: the formula n - 2 requires n >= 3");
    return n - 2;
}

mpz_class kac_lower_bound(std::int64_t n) {
    if (n < 3 || n % 2 == 0)
        throw domain_error("kac_lower_bound: the bound p(n-2) + phi(n-2) - 1 is "
                           "derived for odd n >= 3");
    return partition(n - 2) + totient(n - 2) - 1;
}

} // namespace invar
