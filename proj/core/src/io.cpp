#include "invar/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace invar::io {

namespace {

ordered_json exponents_json(const ExponentVector& e) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < e.size(); ++i)
        arr.push_back(e[i]);
    return arr;
}

} // namespace

ordered_json to_json(const HilbertBasis& basis) {
    ordered_json j;
    j["weights"] = basis.system.weights();
    j["modulus"] = basis.system.modulus();
    j["complete_to_degree"] = basis.complete_to_degree;
    ordered_json elems = ordered_json::array();
    for (const ExponentVector& e : basis.elements)
        elems.push_back(exponents_json(e));
    j["elements"] = std::move(elems);
    return j;
}

HilbertBasis basis_from_json(const nlohmann::json& j) {
    if (!j.contains("weights") || !j.contains("modulus") ||
        !j.contains("complete_to_degree") || !j.contains("elements"))
        throw parameter_error("basis JSON: need weights, modulus, "
                              "complete_to_degree, elements");
    CongruenceSystem system(j["weights"].get<std::vector<std::int64_t>>(),
                            j["modulus"].get<std::int64_t>());
    HilbertBasis basis{system, {}, j["complete_to_degree"].get<std::int64_t>(), {}};
    for (const auto& row : j["elements"]) {
        ExponentVector e(row.get<std::vector<std::int64_t>>());
        if (e.size() != system.rank())
            throw parameter_error("basis JSON: element length does not match rank");
        basis.elements.push_back(std::move(e));
    }
    for (const ExponentVector& e : basis.elements)
        ++basis.counts_by_degree[e.degree()];
    return basis;
}

std::string to_csv(const HilbertBasis& basis) {
    std::ostringstream os;
    os << "degree";
    for (std::size_t i = 1; i <= basis.system.rank(); ++i)
        os << ",x" << i;
    os << "\n";
    for (const ExponentVector& e : basis.elements) {
        os << e.degree();
        for (std::size_t i = 0; i < e.size(); ++i)
            os << "," << e[i];
        os << "\n";
    }
    return os.str();
}

std::string to_table(const HilbertBasis& basis) {
    std::ostringstream os;
    os << "weights:";
    for (std::int64_t w : basis.system.weights())
        os << " " << w;
    os << "\nmodulus: " << basis.system.modulus()
       << "\ncomplete to degree: " << basis.complete_to_degree
       << "\nelements: " << basis.elements.size() << "\n";
    for (const ExponentVector& e : basis.elements) {
        os << "  deg " << e.degree() << "  (";
        for (std::size_t i = 0; i < e.size(); ++i)
            os << (i ? " " : "") << e[i];
        os << ")\n";
    }
    return os.str();
}

ordered_json to_json(const BoundReport& report) {
    ordered_json j;
    j["label"] = report.system.label;
    j["n"] = report.system.n;
    j["weights"] = report.system.weights;
    j["degree_cap"] = report.degree_cap;
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < report.degrees.size(); ++i) {
        ordered_json row;
        row["degree"] = report.degrees[i];
        row["actual"] = report.actual[i];
        row["bound"] = report.bound[i].get_str();
        rows.push_back(std::move(row));
    }
    j["per_degree"] = std::move(rows);
    j["total_actual"] = report.total_actual;
    j["total_bound"] = report.total_bound.get_str();
    j["envelope"] = format_double(report.envelope);
    j["envelope_ratio"] = format_double(report.envelope_ratio);
    j["satisfied"] = report.satisfied;
    return j;
}

std::string to_csv(const BoundReport& report) {
    std::ostringstream os;
    os << "degree,actual,bound\n";
    for (std::size_t i = 0; i < report.degrees.size(); ++i)
        os << report.degrees[i] << "," << report.actual[i] << ","
           << report.bound[i].get_str() << "\n";
    return os.str();
}

std::string to_table(const BoundReport& report) {
    std::ostringstream os;
    os << report.system.label << ": " << report.total_actual
       << " generators up to degree " << report.degree_cap << "\n"
       << "aggregate binomial bound: " << report.total_bound.get_str() << "\n"
       << "envelope: " << format_double(report.envelope)
       << "  ratio: " << format_double(report.envelope_ratio) << "\n"
       << "satisfied: " << (report.satisfied ? "yes" : "no") << "\n"
       << "degree  actual  bound\n";
    for (std::size_t i = 0; i < report.degrees.size(); ++i)
        os << report.degrees[i] << "  " << report.actual[i] << "  "
           << report.bound[i].get_str() << "\n";
    return os.str();
}

ordered_json to_json(const SeriesTable& table) {
    ordered_json j;
    j["n_min"] = table.n_min;
    j["n_max"] = table.n_max;
    j["d_min"] = table.d_min;
    j["d_max"] = table.d_max;
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.values) {
        ordered_json r = ordered_json::array();
        for (const mpz_class& v : row)
            r.push_back(v.get_str());
        rows.push_back(std::move(r));
    }
    j["values"] = std::move(rows);
    return j;
}

std::string to_csv(const SeriesTable& table) {
    std::ostringstream os;
    os << "n";
    for (std::int64_t d = table.d_min; d <= table.d_max; ++d)
        os << "," << d;
    os << "\n";
    for (std::int64_t n = table.n_min; n <= table.n_max; ++n) {
        os << n;
        for (std::int64_t d = table.d_min; d <= table.d_max; ++d)
            os << "," << table.at(n, d).get_str();
        os << "\n";
    }
    return os.str();
}

std::string to_table(const SeriesTable& table) {
    std::ostringstream os;
    os << "a_n(d) for n in [" << table.n_min << ", " << table.n_max << "], d in ["
       << table.d_min << ", " << table.d_max << "]\n";
    for (std::int64_t n = table.n_min; n <= table.n_max; ++n) {
        os << "n=" << n << ":";
        for (std::int64_t d = table.d_min; d <= table.d_max; ++d)
            os << " " << table.at(n, d).get_str();
        os << "\n";
    }
    return os.str();
}

ordered_json to_json(const TransportReport& report) {
    ordered_json j;
    j["n"] = report.n;
    j["torus_count"] = report.torus_count;
    j["cyclic_count"] = report.cyclic_count;
    j["bijective"] = report.bijective;
    ordered_json per_degree = ordered_json::array();
    for (const auto& [degree, counts] : report.per_degree) {
        ordered_json row;
        row["degree"] = degree;
        row["torus"] = counts.first;
        row["cyclic"] = counts.second;
        per_degree.push_back(std::move(row));
    }
    j["per_degree"] = std::move(per_degree);
    if (!report.bijective)
        j["mismatch"] = report.mismatch;
    return j;
}

ordered_json to_json(const OlsonReport& report) {
    ordered_json j;
    j["n"] = report.n;
    j["max_zero_sum_free"] = report.max_size;
    j["witness"] = report.witness;
    j["threshold"] = format_double(report.threshold);
    j["pass"] = report.pass;
    return j;
}

ordered_json to_json(const ReciprocityReport& report) {
    ordered_json j;
    j["n_max"] = report.n_max;
    j["d_max"] = report.d_max;
    j["ok"] = report.ok();
    ordered_json v = ordered_json::array();
    for (const auto& violation : report.violations) {
        ordered_json row;
        row["n"] = violation.n;
        row["d"] = violation.d;
        row["a_n_d"] = violation.a_nd.get_str();
        row["a_d_n"] = violation.a_dn.get_str();
        v.push_back(std::move(row));
    }
    j["violations"] = std::move(v);
    return j;
}

ordered_json to_json(const GrowthDiagnostic& diag) {
    ordered_json j;
    j["d"] = diag.d;
    j["n_max"] = diag.n_max;
    j["fit_min"] = diag.fit_min;
    j["fit_max"] = diag.fit_max;
    j["slope"] = format_double(diag.slope);
    ordered_json samples = ordered_json::array();
    for (const auto& s : diag.samples) {
        ordered_json row;
        row["n"] = s.n;
        row["dim"] = s.dim.get_str();
        row["lower_bound"] = s.lower_bound.get_str();
        row["dim_ratio"] = format_double(s.dim_ratio);
        row["lb_ratio"] = format_double(s.lb_ratio);
        samples.push_back(std::move(row));
    }
    j["samples"] = std::move(samples);
    return j;
}

std::string to_csv(const GrowthDiagnostic& diag) {
    std::ostringstream os;
    os << "n,dim,lower_bound,dim_ratio,lb_ratio\n";
    for (const auto& s : diag.samples)
        os << s.n << "," << s.dim.get_str() << "," << s.lower_bound.get_str() << ","
           << format_double(s.dim_ratio) << "," << format_double(s.lb_ratio) << "\n";
    return os.str();
}

std::string to_plot_data(const GrowthDiagnostic& diag) {
    std::ostringstream os;
    for (const auto& s : diag.samples) {
        if (s.dim <= 0)
            continue;
        os << format_double(std::log(static_cast<double>(s.n))) << " "
           << format_double(std::log(s.dim.get_d())) << "\n";
    }
    return os.str();
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw parameter_error("cannot open output file: " + tmp.string());
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw parameter_error("failed writing output file: " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

} // namespace invar::io
