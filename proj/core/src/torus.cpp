#include "invar/torus.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "invar/arith.hpp"

namespace invar {

namespace {

std::string preset_label(WeightPreset preset, std::int64_t n) {
    switch (preset) {
    case WeightPreset::gm_standard: return "gm_standard(" + std::to_string(n) + ")";
    case WeightPreset::binary_odd: return "binary_odd(" + std::to_string(n) + ")";
    case WeightPreset::binary_even: return "binary_even(" + std::to_string(n) + ")";
    case WeightPreset::generic: break;
    }
    return "generic";
}

} // namespace

std::int64_t WeightSystem::max_abs_weight() const {
    std::int64_t m = 0;
    for (std::int64_t w : weights)
        m = std::max(m, w < 0 ? -w : w);
    return m;
}

WeightSystem make_weight_system(WeightPreset preset, std::int64_t n) {
    if (preset == WeightPreset::generic)
        throw parameter_error("make_weight_system: generic systems take an explicit weight list");
    if (n < 1)
        throw parameter_error("make_weight_system: n must be at least 1");
    WeightSystem ws;
    ws.preset = preset;
    ws.n = n;
    ws.label = preset_label(preset, n);
    switch (preset) {
    case WeightPreset::gm_standard:
        for (std::int64_t w = 1; w <= n; ++w)
            ws.weights.push_back(w);
        ws.weights.push_back(-n);
        break;
    case WeightPreset::binary_odd:
        if (n % 2 == 0)
            throw parameter_error("make_weight_system: binary_odd requires odd n");
        for (std::int64_t w = n; w >= 1; w -= 2)
            ws.weights.push_back(w);
        for (std::int64_t w = -1; w >= -n; w -= 2)
            ws.weights.push_back(w);
        break;
    case WeightPreset::binary_even:
        if (n % 2 != 0)
            throw parameter_error("make_weight_system: binary_even requires even n");
        for (std::int64_t w = -n / 2; w <= n / 2; ++w)
            ws.weights.push_back(w);
        break;
    case WeightPreset::generic:
        break;
    }
    return ws;
}

WeightSystem make_weight_system(std::vector<std::int64_t> weights) {
    if (weights.empty())
        throw parameter_error("make_weight_system: weight list must be nonempty");
    WeightSystem ws;
    ws.weights = std::move(weights);
    ws.label = "generic";
    return ws;
}

WeightPreset preset_from_name(const std::string& name) {
    if (name == "gm" || name == "gm-standard" || name == "gm_standard")
        return WeightPreset::gm_standard;
    if (name == "binary-odd" || name == "binary_odd")
        return WeightPreset::binary_odd;
    if (name == "binary-even" || name == "binary_even")
        return WeightPreset::binary_even;
    throw parameter_error("unknown weight preset: " + name);
}

WeightSystem binary_forms_system(std::int64_t n) {
    if (n < 1)
        throw parameter_error("binary_forms_system: n must be at least 1");
    return make_weight_system(n % 2 ? WeightPreset::binary_odd : WeightPreset::binary_even, n);
}

HilbertBasis generators(const WeightSystem& ws, std::optional<std::int64_t> degree_cap,
                        const SearchOptions& options) {
    return hilbert_basis(CongruenceSystem(ws.weights, 0), degree_cap, options);
}

TransportReport evaluation_transport(std::int64_t n, const SearchOptions& options) {
    if (n < 1)
        throw parameter_error("evaluation_transport: n must be at least 1");

    const HilbertBasis torus = generators(make_weight_system(WeightPreset::gm_standard, n),
                                          std::nullopt, options);
    std::vector<std::int64_t> cyclic_weights;
    for (std::int64_t w = 1; w <= n; ++w)
        cyclic_weights.push_back(w);
    const HilbertBasis cyclic =
        hilbert_basis(CongruenceSystem(std::move(cyclic_weights), n), std::nullopt, options);

    // ev drops the x_{-n} exponent; the multiple of n in the positive part
    // determines it, so the projection should be injective.
    std::vector<ExponentVector> projected;
    projected.reserve(torus.elements.size());
    for (const ExponentVector& e : torus.elements) {
        std::vector<std::int64_t> head(e.exponents().begin(), e.exponents().end() - 1);
        projected.emplace_back(std::move(head));
    }
    std::sort(projected.begin(), projected.end(), canonical_less);

    TransportReport report;
    report.n = n;
    report.torus_count = torus.elements.size();
    report.cyclic_count = cyclic.elements.size();

    for (const ExponentVector& e : projected)
        report.per_degree[e.degree()].first++;
    for (const ExponentVector& e : cyclic.elements)
        report.per_degree[e.degree()].second++;

    report.bijective = projected == cyclic.elements;
    if (!report.bijective) {
        std::ostringstream os;
        if (report.torus_count != report.cyclic_count) {
            os << "count mismatch: " << report.torus_count << " torus generators vs "
               << report.cyclic_count << " cyclic generators";
        } else {
            for (std::size_t i = 0; i < projected.size(); ++i) {
                if (!(projected[i] == cyclic.elements[i])) {
                    os << "element " << i << " differs after projection";
                    break;
                }
            }
        }
        report.mismatch = os.str();
    }
    return report;
}

mpz_class per_degree_upper_bound(const WeightSystem& ws, std::int64_t d) {
    if (d < 0)
        throw parameter_error("per_degree_upper_bound: d must be nonnegative");
    if (d == 0)
        return 1; // empty monomial, excluded from generator counts
    if (ws.preset == WeightPreset::gm_standard) {
        const std::int64_t n = ws.n;
        const std::int64_t s = std::min(isqrt(9 * n), n);
        return binomial(n, s) * binomial(s + d - 1, s - 1);
    }
    if (ws.preset == WeightPreset::binary_odd || ws.preset == WeightPreset::binary_even) {
        const std::int64_t r = ws.max_abs_weight();
        const std::int64_t s = std::min(isqrt(36 * r), 2 * r);
        return binomial(2 * r, s) * binomial(s + d - 1, s - 1);
    }
    throw parameter_error("per_degree_upper_bound: no binomial bound for generic systems");
}

double asymptotic_envelope(std::int64_t n, Parity parity) {
    if (n < 1)
        throw parameter_error("asymptotic_envelope: n must be at least 1");
    if ((n % 2 == 0) != (parity == Parity::even))
        throw parameter_error("asymptotic_envelope: parity does not match n");
    const long double nn = static_cast<long double>(n);
    long double v;
    if (parity == Parity::odd)
        v = nn * std::exp(6.0L * std::sqrt(nn) * std::log(2.0L * nn));
    else
        v = nn * std::exp(12.0L * std::sqrt(nn / 2.0L) * std::log(nn));
    return std::nextafter(static_cast<double>(v), std::numeric_limits<double>::infinity());
}

BoundReport bound_report(const WeightSystem& ws, const SearchOptions& options) {
    BoundReport report;
    report.system = ws;
    const HilbertBasis basis = generators(ws, std::nullopt, options);
    report.degree_cap = basis.complete_to_degree;

    report.total_actual = basis.elements.size();
    report.total_bound = 0;
    bool per_degree_ok = true;
    for (std::int64_t d = 1; d <= report.degree_cap; ++d) {
        const std::size_t actual = basis.count_in_degree(d);
        const mpz_class bnd = per_degree_upper_bound(ws, d);
        report.degrees.push_back(d);
        report.actual.push_back(actual);
        report.bound.push_back(bnd);
        report.total_bound += bnd;
        if (mpz_class(static_cast<unsigned long>(actual)) > bnd)
            per_degree_ok = false;
    }

    switch (ws.preset) {
    case WeightPreset::binary_odd:
        report.envelope = asymptotic_envelope(ws.n, Parity::odd);
        break;
    case WeightPreset::binary_even:
        report.envelope = asymptotic_envelope(ws.n, Parity::even);
        break;
    case WeightPreset::gm_standard: {
        // the single-block bound e^{6 sqrt(n) ln 2n}, no linear factor
        const long double nn = static_cast<long double>(ws.n);
        report.envelope = std::nextafter(
            static_cast<double>(std::exp(6.0L * std::sqrt(nn) * std::log(2.0L * nn))),
            std::numeric_limits<double>::infinity());
        break;
    }
    case WeightPreset::generic:
        throw parameter_error("bound_report: no bound formulas for generic systems");
    }

    report.envelope_ratio = static_cast<double>(report.total_actual) / report.envelope;
    report.satisfied = per_degree_ok &&
                       mpz_class(static_cast<unsigned long>(report.total_actual)) <=
                           report.total_bound &&
                       report.envelope_ratio <= 1.0;
    return report;
}

} // namespace invar
