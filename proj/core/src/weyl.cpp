#include "invar/weyl.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

namespace invar {

namespace {

mpq_class q(long num, long den = 1) {
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

// Checks positive-definiteness of a symmetric rational matrix by symmetric
// Gaussian elimination: all pivots must stay positive.
bool positive_definite(RationalMatrix m) {
    const std::size_t k = m.size();
    for (std::size_t i = 0; i < k; ++i) {
        if (m[i][i] <= 0)
            return false;
        for (std::size_t j = i + 1; j < k; ++j) {
            const mpq_class factor = m[j][i] / m[i][i];
            for (std::size_t c = i; c < k; ++c)
                m[j][c] -= factor * m[i][c];
        }
    }
    return true;
}

// Indices of a maximal linearly independent subset of the given vectors.
std::vector<std::size_t> independent_subset(const std::vector<RationalVector>& vecs,
                                            std::size_t dim) {
    std::vector<std::size_t> chosen;
    std::vector<RationalVector> rows; // row-reduced basis so far
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        RationalVector v = vecs[i];
        for (const RationalVector& r : rows) {
            std::size_t p = 0;
            while (p < dim && r[p] == 0)
                ++p;
            if (p < dim && v[p] != 0) {
                const mpq_class factor = v[p] / r[p];
                for (std::size_t c = 0; c < dim; ++c)
                    v[c] -= factor * r[c];
            }
        }
        if (std::any_of(v.begin(), v.end(), [](const mpq_class& x) { return x != 0; })) {
            chosen.push_back(i);
            rows.push_back(std::move(v));
        }
    }
    return chosen;
}

} // namespace

RootSystemData::RootSystemData(std::size_t rank, std::vector<RationalVector> positive_roots,
                               RationalMatrix gram,
                               std::vector<RationalVector> fundamental_weights,
                               std::string name)
    : rank_(rank), roots_(std::move(positive_roots)), gram_(std::move(gram)),
      fundamental_(std::move(fundamental_weights)), name_(std::move(name)) {
    if (rank_ < 1)
        throw parameter_error("RootSystemData: rank must be at least 1");
    if (roots_.empty())
        throw parameter_error("RootSystemData: need at least one positive root");
    ambient_ = roots_.front().size();
    if (ambient_ < rank_)
        throw parameter_error("RootSystemData: ambient dimension below rank");
    for (const RationalVector& r : roots_)
        if (r.size() != ambient_)
            throw parameter_error("RootSystemData: inconsistent root dimensions");
    if (gram_.size() != ambient_)
        throw parameter_error("RootSystemData: gram matrix must match the ambient dimension");
    for (std::size_t i = 0; i < ambient_; ++i) {
        if (gram_[i].size() != ambient_)
            throw parameter_error("RootSystemData: gram matrix must be square");
        for (std::size_t j = 0; j < i; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw parameter_error("RootSystemData: gram matrix must be symmetric");
    }
    for (const RationalVector& fw : fundamental_)
        if (fw.size() != ambient_)
            throw parameter_error("RootSystemData: fundamental weight dimension mismatch");

    // delta = (1/2) sum of positive roots
    delta_.assign(ambient_, 0);
    for (const RationalVector& r : roots_)
        for (std::size_t i = 0; i < ambient_; ++i)
            delta_[i] += r[i];
    for (std::size_t i = 0; i < ambient_; ++i)
        delta_[i] /= 2;

    for (const RationalVector& r : roots_)
        if (inner(delta_, r) <= 0)
            throw parameter_error("RootSystemData: (delta, alpha) <= 0 for a positive "
                                  "root; not a positive system");

    const std::vector<std::size_t> basis = independent_subset(roots_, ambient_);
    RationalMatrix root_gram(basis.size(), RationalVector(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            root_gram[i][j] = inner(roots_[basis[i]], roots_[basis[j]]);
    if (!positive_definite(std::move(root_gram)))
        throw parameter_error("RootSystemData: gram matrix is not positive-definite "
                              "on the span of the roots");
}

mpq_class RootSystemData::inner(const RationalVector& x, const RationalVector& y) const {
    if (x.size() != ambient_ || y.size() != ambient_)
        throw dimension_error("RootSystemData::inner: vector dimension mismatch");
    mpq_class acc = 0;
    for (std::size_t i = 0; i < ambient_; ++i) {
        if (x[i] == 0)
            continue;
        mpq_class row = 0;
        for (std::size_t j = 0; j < ambient_; ++j)
            row += gram_[i][j] * y[j];
        acc += x[i] * row;
    }
    return acc;
}

RationalVector RootSystemData::weight_from_fundamental(
    const std::vector<mpq_class>& coords) const {
    if (fundamental_.empty())
        throw parameter_error("RootSystemData: no fundamental weights available; "
                              "supply the weight in ambient coordinates");
    if (coords.size() != fundamental_.size())
        throw dimension_error("RootSystemData: expected " +
                              std::to_string(fundamental_.size()) +
                              " fundamental coordinates");
    RationalVector lambda(ambient_, 0);
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j)
            lambda[j] += coords[i] * fundamental_[i][j];
    return lambda;
}

bool RootSystemData::is_dominant(const RationalVector& lambda) const {
    for (const RationalVector& r : roots_)
        if (inner(lambda, r) < 0)
            return false;
    return true;
}

const RootSystemData& RootSystemData::preset(const std::string& name) {
    static const std::map<std::string, RootSystemData> presets = [] {
        std::map<std::string, RootSystemData> m;
        m.emplace("A1", RootSystemData(
                            1, {{q(1)}}, {{q(1)}}, {{q(1, 2)}}, "A1"));
        m.emplace("A2", RootSystemData(
                            2,
                            {{q(1), q(-1), q(0)}, {q(0), q(1), q(-1)}, {q(1), q(0), q(-1)}},
                            {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(1)}},
                            {{q(2, 3), q(-1, 3), q(-1, 3)}, {q(1, 3), q(1, 3), q(-2, 3)}},
                            "A2"));
        m.emplace("B2", RootSystemData(
                            2,
                            {{q(1), q(-1)}, {q(0), q(1)}, {q(1), q(0)}, {q(1), q(1)}},
                            {{q(1), q(0)}, {q(0), q(1)}},
                            {{q(1), q(0)}, {q(1, 2), q(1, 2)}},
                            "B2"));
        m.emplace("G2", RootSystemData(
                            2,
                            {{q(1), q(-1), q(0)},
                             {q(-1), q(2), q(-1)},
                             {q(0), q(1), q(-1)},
                             {q(1), q(0), q(-1)},
                             {q(2), q(-1), q(-1)},
                             {q(1), q(1), q(-2)}},
                            {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(1)}},
                            {{q(1), q(0), q(-1)}, {q(1), q(1), q(-2)}},
                            "G2"));
        return m;
    }();
    const auto it = presets.find(name);
    if (it == presets.end())
        throw parameter_error("unknown root system preset: " + name);
    return it->second;
}

std::vector<std::string> RootSystemData::preset_names() {
    return {"A1", "A2", "B2", "G2"};
}

mpz_class weyl_dimension(const RootSystemData& rs, const RationalVector& lambda,
                         std::int64_t n) {
    if (n < 0)
        throw domain_error("weyl_dimension: n must be nonnegative");
    if (!rs.is_dominant(lambda))
        throw domain_error("weyl_dimension: lambda is not dominant");
    mpq_class value = 1;
    for (const RationalVector& alpha : rs.positive_roots()) {
        const mpq_class num = n * rs.inner(lambda, alpha) + rs.inner(rs.delta(), alpha);
        value *= num / rs.inner(rs.delta(), alpha);
    }
    value.canonicalize();
    if (value.get_den() != 1 || value <= 0)
        throw consistency_error("weyl_dimension: non-integral or non-positive value; "
                                "root data invalid");
    return value.get_num();
}

std::size_t DimensionPolynomial::degree() const {
    std::size_t d = coeffs.size();
    while (d > 1 && coeffs[d - 1] == 0)
        --d;
    return d - 1;
}

mpz_class DimensionPolynomial::eval(std::int64_t n) const {
    mpq_class acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;)
        acc = acc * n + coeffs[k];
    acc.canonicalize();
    if (acc.get_den() != 1 || acc <= 0)
        throw consistency_error("DimensionPolynomial::eval: non-integral value");
    return acc.get_num();
}

DimensionPolynomial dimension_polynomial(const RootSystemData& rs,
                                         const RationalVector& lambda) {
    if (!rs.is_dominant(lambda))
        throw domain_error("dimension_polynomial: lambda is not dominant");
    std::vector<mpq_class> coeffs{1};
    mpq_class denom = 1;
    for (const RationalVector& alpha : rs.positive_roots()) {
        const mpq_class a = rs.inner(lambda, alpha);  // slope in n
        const mpq_class b = rs.inner(rs.delta(), alpha);
        denom *= b;
        std::vector<mpq_class> next(coeffs.size() + 1, 0);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            next[k] += coeffs[k] * b;
            next[k + 1] += coeffs[k] * a;
        }
        coeffs = std::move(next);
    }
    for (mpq_class& c : coeffs)
        c /= denom;
    DimensionPolynomial poly{std::move(coeffs)};
    poly.coeffs.resize(poly.degree() + 1);
    return poly;
}

GrowthExponent growth_exponent(const RootSystemData& rs) {
    GrowthExponent g;
    g.positive_roots = rs.positive_roots().size();
    g.rank = rs.rank();
    g.group_dim = 2 * g.positive_roots + g.rank;
    return g;
}

namespace {

mpq_class rational_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) {
        mpq_class r(static_cast<long>(v.get<std::int64_t>()));
        return r;
    }
    if (v.is_string()) {
        mpq_class r;
        if (r.set_str(v.get<std::string>(), 10) != 0)
            throw parameter_error("root system JSON: cannot parse rational \"" +
                                  v.get<std::string>() + "\"");
        r.canonicalize();
        return r;
    }
    throw parameter_error("root system JSON: rational entries must be integers "
                          "or \"p/q\" strings");
}

std::vector<RationalVector> vectors_from_json(const nlohmann::json& arr,
                                              const char* what) {
    if (!arr.is_array())
        throw parameter_error(std::string("root system JSON: ") + what +
                              " must be an array of vectors");
    std::vector<RationalVector> out;
    for (const auto& row : arr) {
        if (!row.is_array())
            throw parameter_error(std::string("root system JSON: ") + what +
                                  " entries must be arrays");
        RationalVector v;
        for (const auto& x : row)
            v.push_back(rational_from_json(x));
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

RootSystemData root_system_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parameter_error(std::string("root system JSON: ") + e.what());
    }
    if (!j.contains("rank") || !j.contains("positive_roots") || !j.contains("gram"))
        throw parameter_error("root system JSON: need rank, positive_roots, gram");
    const std::size_t rank = j["rank"].get<std::size_t>();
    std::vector<RationalVector> roots = vectors_from_json(j["positive_roots"], "positive_roots");
    std::vector<RationalVector> gram_rows = vectors_from_json(j["gram"], "gram");
    std::vector<RationalVector> fw;
    if (j.contains("fundamental_weights"))
        fw = vectors_from_json(j["fundamental_weights"], "fundamental_weights");
    std::string name = j.value("name", std::string("custom"));
    return RootSystemData(rank, std::move(roots), std::move(gram_rows), std::move(fw),
                          std::move(name));
}

} // namespace invar
