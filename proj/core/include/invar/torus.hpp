#ifndef INVAR_TORUS_HPP
#define INVAR_TORUS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "invar/congruence.hpp"

namespace invar {

enum class WeightPreset { generic, gm_standard, binary_odd, binary_even };

enum class Parity { odd, even };

/// A rank-1 torus weight list: the torus weight of each polynomial variable.
struct WeightSystem {
    std::vector<std::int64_t> weights;
    std::string label;
    WeightPreset preset = WeightPreset::generic;
    std::int64_t n = 0; // preset parameter, 0 for generic

    std::int64_t max_abs_weight() const;
};

/// Preset weight lists:
///   gm_standard(n): 1, 2, ..., n, -n
///   binary_odd(n):  n, n-2, ..., 1, -1, ..., -n   (n odd)
///   binary_even(n): -n/2, ..., 0, ..., n/2        (n even)
WeightSystem make_weight_system(WeightPreset preset, std::int64_t n);
WeightSystem make_weight_system(std::vector<std::int64_t> weights);

/// Parses "gm" / "binary-odd" / "binary-even" (parameter error otherwise).
WeightPreset preset_from_name(const std::string& name);

/// The weight system for k[V_n]^T: binary_odd(n) or binary_even(n) by parity.
WeightSystem binary_forms_system(std::int64_t n);

/// Indecomposable weight-zero monomials: the Hilbert basis of the
/// modulus-0 system over ws.weights, default cap 2*max|w| - 1.
HilbertBasis generators(const WeightSystem& ws,
                        std::optional<std::int64_t> degree_cap = std::nullopt,
                        const SearchOptions& options = {});

/// Outcome of transporting generators along the evaluation map
/// f(x_1..x_n, x_{-n}) -> f(x_1..x_n, 1): the torus generators of
/// gm_standard(n) with the x_{-n} exponent dropped against the cyclic
/// generators of weights (1..n) mod n.
struct TransportReport {
    std::int64_t n = 0;
    std::size_t torus_count = 0;
    std::size_t cyclic_count = 0;
    bool bijective = false; // projected sets identical element for element
    // positive-part degree -> (torus count, cyclic count)
    std::map<std::int64_t, std::pair<std::size_t, std::size_t>> per_degree;
    std::string mismatch; // first discrepancy, empty when bijective
};

TransportReport evaluation_transport(std::int64_t n, const SearchOptions& options = {});

/// Binomial upper bound for the number of generators in degree d:
/// C(n, s) C(s+d-1, s-1) with s = min(floor(3 sqrt n), n) for gm_standard;
/// C(2r, s') C(s'+d-1, s'-1) with s' = min(floor(6 sqrt r), 2r), r = max|w|,
/// for the signed presets.  d = 0 gives 1 (the empty monomial).
mpz_class per_degree_upper_bound(const WeightSystem& ws, std::int64_t d);

/// Asymptotic envelope with implied constant 1, rounded up:
///   n e^{6 sqrt(n) ln 2n}   (odd)
///   n e^{12 sqrt(n/2) ln n} (even)
double asymptotic_envelope(std::int64_t n, Parity parity);

struct BoundReport {
    WeightSystem system;
    std::int64_t degree_cap = 0;
    std::vector<std::int64_t> degrees;      // 1..degree_cap
    std::vector<std::size_t> actual;        // generators per degree
    std::vector<mpz_class> bound;           // binomial bound per degree
    std::size_t total_actual = 0;
    mpz_class total_bound;                  // sum of per-degree bounds
    double envelope = 0.0;                  // asymptotic envelope (constant 1)
    double envelope_ratio = 0.0;            // total_actual / envelope
    bool satisfied = false;                 // all per-degree and aggregate checks
};

BoundReport bound_report(const WeightSystem& ws, const SearchOptions& options = {});

} // namespace invar

#endif
